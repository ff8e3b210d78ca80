#include "fano/rr.hpp"

#include <algorithm>
#include <stdexcept>

#include "fano/arith.hpp"

namespace fano {

Rat rr_correction(std::int64_t s, std::int64_t x, std::int64_t r) {
    if (r < 2) throw std::invalid_argument("rr_correction: r must be at least 2");
    if (x < 0 || x >= r) throw std::invalid_argument("rr_correction: x must lie in [0, r)");
    std::int64_t w = residue(s, x, r);
    return Rat(-w * (r - w), 2 * r);
}

Rat rr_lhs(std::int64_t q, const Rat& c1_cubed, const Basket& b, std::int64_t s) {
    if (q < 1) throw std::invalid_argument("rr_lhs: q must be positive");
    if (s <= 0 || s >= q) throw std::invalid_argument("rr_lhs: s must lie in (0, q)");
    Rat value = Rat(s) * Rat(s) * c1_cubed / Rat(2 * q * q);
    for (const auto& rec : b.records) {
        if (!rec.x) throw std::invalid_argument("rr_lhs: record without residue");
        value += Rat(rec.d) * rr_correction(s, *rec.x, rec.r);
    }
    return value;
}

RrVerdict rr_admissible(std::int64_t q, const Rat& c1_cubed, const Basket& b) {
    if (q < 3) throw std::invalid_argument("rr_admissible: q must be at least 3");
    for (const auto& rec : b.records)
        if (rec.x) throw std::invalid_argument("rr_admissible: basket already carries residues");

    const std::size_t n = b.records.size();
    std::int64_t total = 1;
    for (const auto& rec : b.records) total *= rec.r;

    RrVerdict verdict;
    verdict.assignment_count = total;

    // fails_everywhere[s] stays true while s has failed under every
    // assignment seen so far.
    std::vector<bool> fails_everywhere(static_cast<std::size_t>(q), true);

    std::vector<std::int64_t> x(n, 0);
    Basket assigned = b;
    while (true) {
        for (std::size_t i = 0; i < n; ++i) assigned.records[i].x = x[i];

        std::int64_t first_fail = 0;
        for (std::int64_t s = 1; s < q; ++s) {
            bool integral = rr_lhs(q, c1_cubed, assigned, s).is_integer();
            if (!integral && first_fail == 0) first_fail = s;
            if (integral) fails_everywhere[static_cast<std::size_t>(s)] = false;
        }
        if (first_fail == 0) {
            verdict.admissible = true;
            verdict.assignment = x;
            verdict.failures.clear();
            verdict.uniform_failing_s.clear();
            return verdict;
        }
        verdict.failures.push_back({x, first_fail});

        // Odometer, last record fastest: visits assignments in
        // lexicographic order.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++x[i] < b.records[i].r) break;
            x[i] = 0;
            if (i == 0) {
                for (std::int64_t s = 1; s < q; ++s)
                    if (fails_everywhere[static_cast<std::size_t>(s)])
                        verdict.uniform_failing_s.push_back(s);
                return verdict;
            }
        }
        if (n == 0) {
            // Single empty assignment already handled above.
            for (std::int64_t s = 1; s < q; ++s)
                if (fails_everywhere[static_cast<std::size_t>(s)])
                    verdict.uniform_failing_s.push_back(s);
            return verdict;
        }
    }
}

}  // namespace fano
