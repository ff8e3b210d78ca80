#include "fano/basket.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fano {

namespace {

void validate(const CurveRecord& rec) {
    if (rec.r < 2) throw std::invalid_argument("curve record needs r >= 2");
    if (rec.d < 1) throw std::invalid_argument("curve record needs d >= 1");
    if (rec.x && (*rec.x < 0 || *rec.x >= rec.r))
        throw std::invalid_argument("curve residue must lie in [0, r)");
}

Rat record_cost(std::int64_t r, std::int64_t d) {
    return Rat(d) * (Rat(r) - Rat(1, r));
}

std::int64_t parse_i64(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed basket: bad integer '" + std::string(text) + "'");
    return value;
}

}  // namespace

Basket Basket::of(std::vector<CurveRecord> records) {
    for (const auto& rec : records) validate(rec);
    std::sort(records.begin(), records.end(),
              [](const CurveRecord& a, const CurveRecord& b) { return canonical_less(a, b); });
    return Basket{std::move(records)};
}

bool basket_less(const Basket& a, const Basket& b) {
    return std::lexicographical_compare(
        a.records.begin(), a.records.end(), b.records.begin(), b.records.end(),
        [](const CurveRecord& x, const CurveRecord& y) { return canonical_less(x, y); });
}

Rat basket_cost(const Basket& b) {
    Rat sum;
    for (const auto& rec : b.records) sum += record_cost(rec.r, rec.d);
    return sum;
}

std::int64_t lcm_index(const Basket& b) {
    std::int64_t l = 1;
    for (const auto& rec : b.records) l = std::lcm(l, rec.r);
    return l;
}

namespace {

struct BasketSearch {
    std::int64_t J;
    Rat budget;
    std::vector<CurveRecord> current;
    std::vector<Basket> out;

    // Largest d with d*(r - 1/r) <= remaining, i.e. d <= remaining*r/(r^2-1).
    static std::int64_t max_degree(std::int64_t r, const Rat& remaining) {
        Rat bound = remaining * Rat(r) / Rat(r * r - 1);
        if (bound.is_negative()) return 0;
        return bound.num() / bound.den();
    }

    // Extend with records canonically >= (r_from, d_from), keeping the
    // multiset sorted; emit every node whose lcm the constraint divides.
    void extend(std::int64_t r_from, std::int64_t d_from, const Rat& remaining,
                std::int64_t lcm_so_far) {
        if (J == 1 || lcm_so_far % J == 0) out.push_back(Basket{current});
        for (std::int64_t r = r_from; r >= 2; --r) {
            std::int64_t d_hi = max_degree(r, remaining);
            if (r == r_from) d_hi = std::min(d_hi, d_from);
            for (std::int64_t d = d_hi; d >= 1; --d) {
                current.push_back(CurveRecord{r, d, std::nullopt});
                extend(r, d, remaining - record_cost(r, d), std::lcm(lcm_so_far, r));
                current.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<Basket> enumerate_baskets(std::int64_t J, const Rat& budget) {
    if (J < 1) throw std::invalid_argument("enumerate_baskets: J must be positive");
    if (budget.is_negative()) return {};
    BasketSearch search{J, budget, {}, {}};
    // Largest admissible transverse index: r - 1/r <= budget.
    std::int64_t r_max = 1;
    while (record_cost(r_max + 1, 1) <= budget) ++r_max;
    search.extend(r_max, std::numeric_limits<std::int64_t>::max(), budget, 1);
    return std::move(search.out);
}

std::string format_basket(const Basket& b) {
    if (b.records.empty()) return "-";
    std::string s;
    for (const auto& rec : b.records) {
        if (!s.empty()) s += ',';
        s += std::to_string(rec.r) + ":" + std::to_string(rec.d);
        if (rec.x) s += ":" + std::to_string(*rec.x);
    }
    return s;
}

Basket parse_basket(std::string_view text) {
    std::vector<CurveRecord> records;
    if (text == "-" || text.empty()) return Basket::of(std::move(records));
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos);
        size_t c1 = item.find(':');
        if (c1 == std::string_view::npos)
            throw std::invalid_argument("malformed basket: expected r:d in '" +
                                        std::string(item) + "'");
        size_t c2 = item.find(':', c1 + 1);
        CurveRecord rec;
        rec.r = parse_i64(item.substr(0, c1));
        if (c2 == std::string_view::npos) {
            rec.d = parse_i64(item.substr(c1 + 1));
        } else {
            rec.d = parse_i64(item.substr(c1 + 1, c2 - c1 - 1));
            rec.x = parse_i64(item.substr(c2 + 1));
        }
        records.push_back(rec);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Basket::of(std::move(records));
}

}  // namespace fano
