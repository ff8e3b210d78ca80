#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

// Weights of a 3-dimensional weighted projective space P(a0,a1,a2,a3),
// normalized non-decreasing. Equality is multiset equality.
struct WeightVector {
    std::array<std::int64_t, 4> w;

    static WeightVector of(std::int64_t a0, std::int64_t a1, std::int64_t a2, std::int64_t a3);

    std::int64_t sum() const { return w[0] + w[1] + w[2] + w[3]; }
    std::int64_t product() const { return w[0] * w[1] * w[2] * w[3]; }
    std::string str() const;  // "(1,3,8,12)"

    auto operator<=>(const WeightVector&) const = default;
};

// Every 3-element sub-multiset of weights has gcd 1.
bool is_well_formed(const WeightVector& w);

// Q-Fano index of a well-formed weighted projective 3-space: the weight sum.
// Rejects non-well-formed input.
std::int64_t fano_index(const WeightVector& w);

// Anticanonical degree (sum of weights)^3 / (product of weights), exact.
// Rejects non-well-formed input.
Rat degree(const WeightVector& w);

// Each weight divides the weight sum. Rejects non-well-formed input.
bool is_gorenstein(const WeightVector& w);

// All well-formed Gorenstein weighted projective 3-spaces, sorted.
//
// Gorenstein well-formed weight vectors correspond to multisets
// b0 <= b1 <= b2 <= b3 of positive integers with 1/b0+1/b1+1/b2+1/b3 = 1
// via b_i = (sum of weights)/a_i; the enumeration solves the unit-fraction
// equation and maps back with h = lcm(b_i), a_i = h/b_i.
std::vector<WeightVector> enumerate_gorenstein_wps3();

}  // namespace fano
