#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fano/basket.hpp"
#include "oracles.hpp"

using namespace fano;

namespace {
Basket basket_of(std::initializer_list<std::pair<std::int64_t, std::int64_t>> recs) {
    std::vector<CurveRecord> records;
    for (auto [r, d] : recs) records.push_back(CurveRecord{r, d, std::nullopt});
    return Basket::of(std::move(records));
}
}  // namespace

TEST_CASE("record validation") {
    CHECK_THROWS_AS(Basket::of({CurveRecord{1, 1, std::nullopt}}), std::invalid_argument);
    CHECK_THROWS_AS(Basket::of({CurveRecord{5, 0, std::nullopt}}), std::invalid_argument);
    CHECK_THROWS_AS(Basket::of({CurveRecord{5, 1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Basket::of({CurveRecord{5, 1, -1}}), std::invalid_argument);
}

TEST_CASE("canonical ordering is r desc, d desc") {
    Basket b = basket_of({{2, 1}, {8, 1}, {5, 2}, {5, 1}});
    REQUIRE(b.records.size() == 4);
    CHECK(b.records[0].r == 8);
    CHECK(b.records[1].r == 5);
    CHECK(b.records[1].d == 2);
    CHECK(b.records[2].d == 1);
    CHECK(b.records[3].r == 2);
}

TEST_CASE("basket_cost") {
    CHECK(basket_cost(Basket{}) == Rat(0));
    CHECK(basket_cost(basket_of({{5, 1}, {8, 1}})) == Rat(507, 40));
    CHECK(basket_cost(basket_of({{2, 3}})) == Rat(9, 2));
}

TEST_CASE("lcm_index") {
    CHECK(lcm_index(Basket{}) == 1);
    CHECK(lcm_index(basket_of({{5, 1}, {8, 1}})) == 40);
    CHECK(lcm_index(basket_of({{4, 1}, {9, 1}, {2, 1}})) == 36);
}

TEST_CASE("enumerate_baskets: the q = 40 instance has a unique basket") {
    auto baskets = enumerate_baskets(40, Rat(14));
    REQUIRE(baskets.size() == 1);
    CHECK(baskets[0] == basket_of({{8, 1}, {5, 1}}));

    // Raising any degree or appending the cheapest record leaves the budget.
    CHECK(basket_cost(basket_of({{8, 1}, {5, 2}})) > Rat(14));
    CHECK(basket_cost(basket_of({{8, 2}, {5, 1}})) > Rat(14));
    CHECK(basket_cost(basket_of({{8, 1}, {5, 1}, {2, 1}})) == Rat(507, 40) + Rat(3, 2));
    CHECK(basket_cost(basket_of({{8, 1}, {5, 1}, {2, 1}})) > Rat(14));
}

TEST_CASE("enumerate_baskets: edge cases") {
    auto trivial = enumerate_baskets(1, Rat(0));
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].records.empty());

    CHECK(enumerate_baskets(17, Rat(31, 2)).empty());
    CHECK(enumerate_baskets(1, Rat(-1)).empty());
    CHECK_THROWS_AS(enumerate_baskets(0, Rat(5)), std::invalid_argument);
}

TEST_CASE("enumerate_baskets: postconditions and ordering") {
    for (std::int64_t J : {1, 6, 12, 40}) {
        auto baskets = enumerate_baskets(J, Rat(12));
        for (std::size_t i = 0; i < baskets.size(); ++i) {
            CHECK(basket_cost(baskets[i]) <= Rat(12));
            CHECK(lcm_index(baskets[i]) % J == 0);
            if (i + 1 < baskets.size()) CHECK(basket_less(baskets[i], baskets[i + 1]));
        }
    }
}

TEST_CASE("enumerate_baskets: monotone in the budget") {
    auto smaller = enumerate_baskets(6, Rat(8));
    auto larger = enumerate_baskets(6, Rat(21, 2));
    std::set<oracle::BasketKey> larger_keys;
    for (const auto& b : larger) larger_keys.insert(oracle::key_of(b));
    CHECK(smaller.size() < larger.size());
    for (const auto& b : smaller) CHECK(larger_keys.contains(oracle::key_of(b)));
}

TEST_CASE("enumerate_baskets agrees with the naive multiset oracle") {
    for (std::int64_t J = 1; J <= 12; ++J) {
        for (const Rat& budget : {Rat(0), Rat(3, 2), Rat(5), Rat(17, 2), Rat(10)}) {
            auto baskets = enumerate_baskets(J, budget);
            std::set<oracle::BasketKey> keys;
            for (const auto& b : baskets) keys.insert(oracle::key_of(b));
            REQUIRE(keys.size() == baskets.size());
            CHECK(keys == oracle::naive_baskets(J, budget, 12, 7));
        }
    }
}

TEST_CASE("basket text syntax") {
    CHECK(format_basket(Basket{}) == "-");
    CHECK(format_basket(basket_of({{5, 1}, {8, 1}})) == "8:1,5:1");
    CHECK(parse_basket("5:1,8:1") == basket_of({{8, 1}, {5, 1}}));
    CHECK(parse_basket("-") == Basket{});

    Basket annotated = parse_basket("5:1:2,8:1:3");
    REQUIRE(annotated.records.size() == 2);
    CHECK(annotated.records[0].x == 3);
    CHECK(annotated.records[1].x == 2);
    CHECK(format_basket(annotated) == "8:1:3,5:1:2");
    CHECK(parse_basket(format_basket(annotated)) == annotated);

    CHECK_THROWS_AS(parse_basket("5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_basket("5:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_basket("5:1:9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_basket("1:1"), std::invalid_argument);
}
