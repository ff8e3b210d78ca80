#pragma once

#include <string>

#include "fano/sieve.hpp"

namespace fano {

// Machine-checkable report renderings. Every rendering ends with a
// single trailing newline; rationals appear as exact "num/den" strings
// (plain integers when the denominator is 1). Serialization is
// deterministic, so equal reports render byte-identically.
std::string to_json_string(const SieveReport& report);
std::string to_csv(const SieveReport& report);
std::string to_table(const SieveReport& report);

// One-line human-readable witness description, used by csv and table.
std::string witness_summary(const Verdict& verdict);

}  // namespace fano
