#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

// Prime factorization with strictly increasing primes; empty for n = 1.
struct Factorization {
    std::vector<std::pair<std::int64_t, int>> prime_powers;  // (p, a), a >= 1

    // p^a for each factor, in prime order.
    std::vector<std::int64_t> prime_power_values() const;
    std::int64_t value() const;  // product of p^a (1 for the empty product)
};

// Trial division; rejects n <= 0.
Factorization factorize(std::int64_t n);

// Euler totient via the product formula; rejects m <= 0.
std::int64_t euler_phi(std::int64_t m);

// All m >= 1 with euler_phi(m) <= bound, minus the exclusions, sorted.
// The search ceiling 2*bound^2 comes from phi(m) >= sqrt(m/2).
std::vector<std::int64_t> phi_index_set(std::int64_t bound,
                                        const std::vector<std::int64_t>& exclusions = {});

// Sum of (p^a - 1/p^a) over the prime powers of j; 0 for j = 1.
// This is also the minimal cost of a singularity basket whose lcm is
// divisible by j, used by both the 3-fold and the surface budget filters.
Rat j_budget_term(std::int64_t j);

// Budget available to a 3-fold basket: 24 - c1^3/4. May be negative;
// callers treat a negative budget as immediate elimination.
Rat km_budget_3fold(const Rat& c1_cubed);

// Coefficient (2 + 2*eps)/eps of the eps-lc degree bound; equals 4 at eps = 1.
Rat epsilon_lc_coefficient(const Rat& eps);

// (s*x) mod r normalized into [0, r); rejects r < 2. s and x may be negative.
std::int64_t residue(std::int64_t s, std::int64_t x, std::int64_t r);

}  // namespace fano
