#include "fano/arith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fano {

std::vector<std::int64_t> Factorization::prime_power_values() const {
    std::vector<std::int64_t> values;
    values.reserve(prime_powers.size());
    for (const auto& [p, a] : prime_powers) {
        std::int64_t pw = 1;
        for (int i = 0; i < a; ++i) pw *= p;
        values.push_back(pw);
    }
    return values;
}

std::int64_t Factorization::value() const {
    std::int64_t n = 1;
    for (std::int64_t pw : prime_power_values()) n *= pw;
    return n;
}

Factorization factorize(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        f.prime_powers.emplace_back(p, a);
    }
    if (n > 1) f.prime_powers.emplace_back(n, 1);
    return f;
}

std::int64_t euler_phi(std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
    std::int64_t phi = 1;
    for (const auto& [p, a] : factorize(m).prime_powers) {
        std::int64_t pw = 1;
        for (int i = 0; i < a - 1; ++i) pw *= p;
        phi *= pw * (p - 1);
    }
    return phi;
}

std::vector<std::int64_t> phi_index_set(std::int64_t bound,
                                        const std::vector<std::int64_t>& exclusions) {
    if (bound < 1) throw std::invalid_argument("phi_index_set: bound must be positive");
    const std::set<std::int64_t> excluded(exclusions.begin(), exclusions.end());
    // phi(m) >= sqrt(m/2), so phi(m) <= bound forces m <= 2*bound^2.
    const std::int64_t ceiling = 2 * bound * bound;
    std::vector<std::int64_t> result;
    for (std::int64_t m = 1; m <= ceiling; ++m)
        if (euler_phi(m) <= bound && !excluded.contains(m)) result.push_back(m);
    return result;
}

Rat j_budget_term(std::int64_t j) {
    if (j <= 0) throw std::invalid_argument("j_budget_term: j must be positive");
    Rat sum;
    for (std::int64_t pw : factorize(j).prime_power_values())
        sum += Rat(pw) - Rat(1, pw);
    return sum;
}

Rat km_budget_3fold(const Rat& c1_cubed) {
    if (!(c1_cubed > Rat(0)))
        throw std::invalid_argument("km_budget_3fold: degree must be positive");
    return Rat(24) - c1_cubed / Rat(4);
}

Rat epsilon_lc_coefficient(const Rat& eps) {
    if (!(eps > Rat(0)) || eps > Rat(1))
        throw std::invalid_argument("epsilon_lc_coefficient: eps must lie in (0, 1]");
    return (Rat(2) + Rat(2) * eps) / eps;
}

std::int64_t residue(std::int64_t s, std::int64_t x, std::int64_t r) {
    if (r < 2) throw std::invalid_argument("residue: r must be at least 2");
    std::int64_t sm = ((s % r) + r) % r;
    std::int64_t xm = ((x % r) + r) % r;
    return static_cast<std::int64_t>((static_cast<__int128>(sm) * xm) % r);
}

}  // namespace fano
