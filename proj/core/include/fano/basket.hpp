#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

// A curve of transverse type A_{r-1} in the singular locus, with
// anticanonical degree d, and optionally the residue parameter x of the
// Riemann-Roch correction term.
struct CurveRecord {
    std::int64_t r = 2;                  // transverse index, >= 2
    std::int64_t d = 1;                  // -K.C, >= 1
    std::optional<std::int64_t> x;       // residue in [0, r)

    // Canonical record order: r descending, then d descending.
    friend bool canonical_less(const CurveRecord& a, const CurveRecord& b) {
        if (a.r != b.r) return a.r > b.r;
        return a.d > b.d;
    }
    bool operator==(const CurveRecord& o) const { return r == o.r && d == o.d && x == o.x; }
};

// Finite multiset of curve records in canonical order. May be empty.
struct Basket {
    std::vector<CurveRecord> records;

    static Basket of(std::vector<CurveRecord> records);  // validates and sorts

    bool operator==(const Basket& o) const { return records == o.records; }
};

// Lexicographic on the canonically sorted record lists.
bool basket_less(const Basket& a, const Basket& b);

// Sum over records of d * (r - 1/r); the lower bound each curve imposes
// on the available budget. Zero iff the basket is empty.
Rat basket_cost(const Basket& b);

// lcm of the transverse indices; 1 for the empty basket.
std::int64_t lcm_index(const Basket& b);

// All baskets (no residues assigned) with basket_cost <= budget whose
// lcm_index is divisible by J, in lexicographic order of their canonical
// record lists. Finite: every record costs at least 3/2.
std::vector<Basket> enumerate_baskets(std::int64_t J, const Rat& budget);

// Text syntax "r:d" pairs, canonical order, e.g. "8:1,5:1"; with residue
// "r:d:x". Empty basket renders as "-".
std::string format_basket(const Basket& b);
Basket parse_basket(std::string_view text);  // throws std::invalid_argument

}  // namespace fano
