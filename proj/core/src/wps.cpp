#include "fano/wps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fano {

WeightVector WeightVector::of(std::int64_t a0, std::int64_t a1, std::int64_t a2,
                              std::int64_t a3) {
    WeightVector v{{a0, a1, a2, a3}};
    for (std::int64_t a : v.w)
        if (a < 1) throw std::invalid_argument("weights must be positive");
    std::sort(v.w.begin(), v.w.end());
    return v;
}

std::string WeightVector::str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + ")";
}

bool is_well_formed(const WeightVector& v) {
    for (int omit = 0; omit < 4; ++omit) {
        std::int64_t g = 0;
        for (int i = 0; i < 4; ++i)
            if (i != omit) g = std::gcd(g, v.w[i]);
        if (g != 1) return false;
    }
    return true;
}

namespace {

void require_well_formed(const WeightVector& v) {
    if (!is_well_formed(v))
        throw std::invalid_argument("weight vector " + v.str() + " is not well-formed");
}

// Unit-fraction solver: multisets prev <= b_0 <= ... with sum of 1/b_i
// equal to `remaining`, written over the common denominator den
// (remaining = num/den).
void solve_unit_fractions(int slots, std::int64_t prev, std::int64_t num, std::int64_t den,
                          std::vector<std::int64_t>& picked,
                          std::vector<std::vector<std::int64_t>>& out) {
    if (slots == 0) {
        if (num == 0) out.push_back(picked);
        return;
    }
    if (num <= 0) return;
    // 1/b <= num/den <= slots/b  =>  ceil(den/num) <= b <= slots*den/num.
    std::int64_t lo = std::max(prev, (den + num - 1) / num);
    std::int64_t hi = (slots * den) / num;
    for (std::int64_t b = lo; b <= hi; ++b) {
        // remaining - 1/b = (num*b - den) / (den*b)
        std::int64_t n2 = num * b - den;
        std::int64_t d2 = den * b;
        std::int64_t g = std::gcd(n2 == 0 ? d2 : n2, d2);
        picked.push_back(b);
        solve_unit_fractions(slots - 1, b, n2 / g, d2 / g, picked, out);
        picked.pop_back();
    }
}

}  // namespace

std::int64_t fano_index(const WeightVector& v) {
    require_well_formed(v);
    return v.sum();
}

Rat degree(const WeightVector& v) {
    require_well_formed(v);
    Rat h(v.sum());
    return h * h * h / Rat(v.product());
}

bool is_gorenstein(const WeightVector& v) {
    require_well_formed(v);
    std::int64_t h = v.sum();
    return std::all_of(v.w.begin(), v.w.end(), [h](std::int64_t a) { return h % a == 0; });
}

std::vector<WeightVector> enumerate_gorenstein_wps3() {
    std::vector<std::vector<std::int64_t>> solutions;
    std::vector<std::int64_t> picked;
    solve_unit_fractions(4, 1, 1, 1, picked, solutions);

    std::vector<WeightVector> spaces;
    for (const auto& b : solutions) {
        std::int64_t h = 1;
        for (std::int64_t bi : b) h = std::lcm(h, bi);
        WeightVector v = WeightVector::of(h / b[0], h / b[1], h / b[2], h / b[3]);
        // h = lcm(b_i) makes the four weights have trivial common divisor,
        // which for these solutions is full well-formedness.
        if (is_well_formed(v) && is_gorenstein(v)) spaces.push_back(v);
    }
    std::sort(spaces.begin(), spaces.end());
    spaces.erase(std::unique(spaces.begin(), spaces.end()), spaces.end());
    return spaces;
}

}  // namespace fano
