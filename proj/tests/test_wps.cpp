#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fano/wps.hpp"
#include "oracles.hpp"

using namespace fano;

TEST_CASE("well-formedness means coprime weight triples") {
    CHECK(is_well_formed(WeightVector::of(1, 1, 1, 1)));
    CHECK(is_well_formed(WeightVector::of(1, 3, 8, 12)));
    CHECK_FALSE(is_well_formed(WeightVector::of(2, 4, 6, 3)));
    CHECK_THROWS_AS(WeightVector::of(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("fano_index is the weight sum") {
    CHECK(fano_index(WeightVector::of(1, 3, 8, 12)) == 24);
    CHECK(fano_index(WeightVector::of(2, 3, 10, 15)) == 30);
    CHECK(fano_index(WeightVector::of(1, 1, 1, 1)) == 4);
    CHECK_THROWS_AS(fano_index(WeightVector::of(2, 4, 6, 3)), std::invalid_argument);
}

TEST_CASE("degree") {
    CHECK(degree(WeightVector::of(1, 1, 1, 3)) == Rat(72));
    CHECK(degree(WeightVector::of(1, 1, 4, 6)) == Rat(72));
    CHECK(degree(WeightVector::of(1, 6, 14, 21)) == Rat(42));
    CHECK_THROWS_AS(degree(WeightVector::of(2, 4, 6, 3)), std::invalid_argument);
}

TEST_CASE("Gorenstein iff each weight divides the sum") {
    CHECK(is_gorenstein(WeightVector::of(1, 3, 8, 12)));
    CHECK_FALSE(is_gorenstein(WeightVector::of(1, 1, 1, 2)));
    CHECK(is_gorenstein(WeightVector::of(1, 1, 1, 1)));
}

TEST_CASE("Gorenstein enumeration") {
    auto spaces = enumerate_gorenstein_wps3();
    REQUIRE(spaces.size() == 14);

    std::set<std::int64_t> indices;
    for (const auto& w : spaces) indices.insert(fano_index(w));
    CHECK(indices == std::set<std::int64_t>{4, 6, 8, 10, 12, 18, 20, 24, 30, 42});

    auto contains = [&](WeightVector w) {
        return std::find(spaces.begin(), spaces.end(), w) != spaces.end();
    };
    CHECK(contains(WeightVector::of(1, 3, 8, 12)));
    CHECK(contains(WeightVector::of(2, 3, 10, 15)));
    CHECK(contains(WeightVector::of(1, 6, 14, 21)));
    CHECK(fano_index(WeightVector::of(1, 6, 14, 21)) == 42);

    SUBCASE("unit-fraction correspondence") {
        for (const auto& w : spaces) {
            std::int64_t h = fano_index(w);
            Rat sum;
            for (std::int64_t a : w.w) {
                REQUIRE(h % a == 0);
                sum += Rat(a, h);  // a/h = 1/b with b = h/a
            }
            CHECK(sum == Rat(1));
        }
    }

    SUBCASE("degrees are even, at most 72, with 72 attained exactly twice") {
        int at_72 = 0;
        for (const auto& w : spaces) {
            Rat d = degree(w);
            REQUIRE(d.is_integer());
            CHECK(d.num() % 2 == 0);
            CHECK(d <= Rat(72));
            CHECK(d > Rat(0));
            if (d == Rat(72)) {
                ++at_72;
                bool expected = w == WeightVector::of(1, 1, 1, 3) ||
                                w == WeightVector::of(1, 1, 4, 6);
                CHECK(expected);
            }
        }
        CHECK(at_72 == 2);
    }

    SUBCASE("degree times weight product is the index cubed") {
        for (const auto& w : spaces) {
            std::int64_t h = fano_index(w);
            CHECK(degree(w) * Rat(w.product()) == Rat(h) * Rat(h) * Rat(h));
        }
    }
}

TEST_CASE("brute-force weight scan reproduces the enumeration") {
    auto scan = oracle::gorenstein_scan(64);
    auto spaces = enumerate_gorenstein_wps3();
    REQUIRE(scan.size() == spaces.size());
    for (std::size_t i = 0; i < scan.size(); ++i) CHECK(scan[i] == spaces[i].w);
}
