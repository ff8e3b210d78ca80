// Acceptance suite: every release criterion as an executable check, one
// pass/fail line each. Run with no arguments for the full battery or with
// "--criterion N" for a single one. Exit code = number of failures.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fano/arith.hpp"
#include "fano/report.hpp"
#include "fano/rr.hpp"
#include "fano/sieve.hpp"
#include "fano/wps.hpp"
#include "oracles.hpp"

using namespace fano;
using boost::multiprecision::cpp_rational;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

#define EXPECT(cond)                                             \
    do {                                                         \
        if (!(cond)) {                                           \
            out.pass = false;                                    \
            out.detail << " [failed: " << #cond << "]";          \
        }                                                        \
    } while (0)

template <typename T>
std::set<T> as_set(const std::vector<T>& v) {
    return {v.begin(), v.end()};
}

// 1. Gorenstein WPS enumeration: count, index set, witnesses, degree-72 pair.
Outcome criterion1() {
    Outcome out;
    auto spaces = enumerate_gorenstein_wps3();
    EXPECT(spaces.size() == 14);

    std::set<std::int64_t> indices;
    for (const auto& w : spaces) indices.insert(fano_index(w));
    EXPECT(indices == (std::set<std::int64_t>{4, 6, 8, 10, 12, 18, 20, 24, 30, 42}));

    auto has = [&](WeightVector w) {
        return std::find(spaces.begin(), spaces.end(), w) != spaces.end();
    };
    EXPECT(has(WeightVector::of(1, 3, 8, 12)));
    EXPECT(fano_index(WeightVector::of(1, 3, 8, 12)) == 24);
    EXPECT(has(WeightVector::of(2, 3, 10, 15)));
    EXPECT(fano_index(WeightVector::of(2, 3, 10, 15)) == 30);
    EXPECT(has(WeightVector::of(1, 6, 14, 21)));
    EXPECT(fano_index(WeightVector::of(1, 6, 14, 21)) == 42);
    EXPECT(degree(WeightVector::of(1, 1, 1, 3)) == Rat(72));
    EXPECT(degree(WeightVector::of(1, 1, 4, 6)) == Rat(72));
    return out;
}

// 2. Brute-force weight scan over sum <= 64 reproduces the same set.
Outcome criterion2() {
    Outcome out;
    auto scan = oracle::gorenstein_scan(64);
    auto spaces = enumerate_gorenstein_wps3();
    EXPECT(scan.size() == 14);
    EXPECT(scan.size() == spaces.size());
    for (std::size_t i = 0; i < std::min(scan.size(), spaces.size()); ++i)
        EXPECT(scan[i] == spaces[i].w);
    return out;
}

// 3. Budget stage alone on 23..66 leaves {24, 26, 28, 30, 36, 40, 42}.
Outcome criterion3() {
    Outcome out;
    auto report = threefold_sieve(23, 66, StageSet::parse("budget"));
    EXPECT(as_set(report.survivors) == (std::set<std::int64_t>{24, 26, 28, 30, 36, 40, 42}));
    EXPECT(report.discrepancies.empty());
    return out;
}

// 4. Full pipeline on 23..66: survivors {24, 30, 42}; the q = 40 story;
//    26/28/36 fall at the rr stage; discrepancy flagging is armed.
Outcome criterion4() {
    Outcome out;
    auto report = threefold_sieve(23, 66, StageSet::all());
    EXPECT(as_set(report.survivors) == (std::set<std::int64_t>{24, 30, 42}));
    EXPECT(report.discrepancies.empty());

    std::vector<const Verdict*> q40;
    for (const auto& v : report.verdicts)
        if (v.candidate.q == 40) q40.push_back(&v);
    EXPECT(q40.size() == 1);
    if (q40.size() == 1) {
        const Verdict& v = *q40[0];
        EXPECT(v.candidate.J == 40);
        EXPECT(v.candidate.degree == 40);
        EXPECT(!v.survived);
        EXPECT(v.stage == Stage::rr);
        const auto* w = std::get_if<RrEliminationWitness>(&v.witness);
        EXPECT(w != nullptr);
        if (w != nullptr) {
            EXPECT(w->baskets.size() == 1);
            Basket expected = Basket::of({CurveRecord{5, 1, std::nullopt},
                                          CurveRecord{8, 1, std::nullopt}});
            EXPECT(w->baskets[0].basket == expected);
            const RrVerdict& rv = w->baskets[0].verdict;
            EXPECT(rv.assignment_count == 40);
            EXPECT(rv.failures.size() == 40);
            // s = 5 fails under all 40 residue assignments
            EXPECT(std::count(rv.uniform_failing_s.begin(), rv.uniform_failing_s.end(), 5) == 1);
            Basket probe = expected;
            for (auto x5 = 0; x5 < 5; ++x5)
                for (auto x8 = 0; x8 < 8; ++x8) {
                    probe.records[0].x = x8;  // canonical order: A_7 record first
                    probe.records[1].x = x5;
                    EXPECT(!rr_lhs(40, Rat(40), probe, 5).is_integer());
                }
        }
    }

    for (std::int64_t q : {26, 28, 36}) {
        bool has_rr_elimination = false;
        for (const auto& v : report.verdicts)
            if (v.candidate.q == q) {
                EXPECT(!v.survived);
                if (v.stage == Stage::rr) has_rr_elimination = true;
            }
        EXPECT(has_rr_elimination);
    }

    // Exit-code-1 contract: a survival among 26/28/36 would be flagged.
    for (std::int64_t q : {26, 28, 36})
        EXPECT(paper_discrepancies("threefold-sieve", StageSet::all(), {q}) ==
               (std::vector<std::int64_t>{q}));
    return out;
}

// 5. q = 17 and 19 fall at the budget stage with J forced equal to q.
Outcome criterion5() {
    Outcome out;
    auto report = threefold_sieve(17, 19, StageSet::all());
    EXPECT(as_set(report.survivors) == (std::set<std::int64_t>{18}));
    for (std::int64_t q : {17, 19}) {
        int budget_eliminations = 0;
        for (const auto& v : report.verdicts) {
            if (v.candidate.q != q) continue;
            EXPECT(!v.survived);
            if (v.stage == Stage::budget) {
                ++budget_eliminations;
                EXPECT(v.candidate.J == q);
                const auto* w = std::get_if<BudgetWitness>(&v.witness);
                EXPECT(w != nullptr);
                if (w) EXPECT(w->j_term > w->budget);
            } else {
                EXPECT(v.stage == Stage::degree_bound);  // odd-degree tuples
            }
        }
        EXPECT(budget_eliminations > 0);
    }
    return out;
}

// 6. Surface sieve: no survivors in 7..9, survivors {3,4,5,6} in 3..6.
Outcome criterion6() {
    Outcome out;
    EXPECT(surface_sieve(7, 9).survivors.empty());
    EXPECT(as_set(surface_sieve(3, 6).survivors) == (std::set<std::int64_t>{3, 4, 5, 6}));
    EXPECT(surface_sieve(7, 9).discrepancies.empty());
    return out;
}

// 7. phi_index_set: maximum 66, excludes 60, contains {1,2,3,4,6}.
Outcome criterion7() {
    Outcome out;
    auto i3 = phi_index_set(20, {60});
    EXPECT(!i3.empty());
    EXPECT(i3.back() == 66);
    EXPECT(std::find(i3.begin(), i3.end(), 60) == i3.end());
    auto i2 = phi_index_set(2, {});
    EXPECT(i2 == (std::vector<std::int64_t>{1, 2, 3, 4, 6}));
    for (std::int64_t m : i2) EXPECT(std::find(i3.begin(), i3.end(), m) != i3.end());
    return out;
}

// 8. Property suites: rational oracle (10^4 cases), rr vs naive oracle,
//    basket enumeration vs naive oracle, per-worker determinism.
Outcome criterion8() {
    Outcome out;

    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
    for (int i = 0; i < 10'000 && out.pass; ++i) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        cpp_rational ca = oracle::to_cpp(a), cb = oracle::to_cpp(b);
        EXPECT(oracle::to_cpp(a + b) == ca + cb);
        EXPECT(oracle::to_cpp(a - b) == ca - cb);
        EXPECT(oracle::to_cpp(a * b) == ca * cb);
        if (!b.is_zero()) EXPECT(oracle::to_cpp(a / b) == ca / cb);
        EXPECT((a < b) == (ca < cb));
    }

    int rr_checked = 0;
    for (std::int64_t q = 3; q <= 12; ++q)
        for (const Candidate& c : enumerate_candidates(q))
            for (const auto& b : enumerate_baskets(c.J, km_budget_3fold(Rat(c.degree)))) {
                std::int64_t space = 1;
                for (const auto& rec : b.records) space *= rec.r;
                if (space > 64) continue;
                ++rr_checked;
                EXPECT(rr_admissible(c.q, Rat(c.degree), b).admissible ==
                       oracle::naive_rr_admissible(c.q, c.degree, oracle::key_of(b)));
            }
    EXPECT(rr_checked > 50);

    for (std::int64_t J = 1; J <= 12; ++J)
        for (const Rat& budget : {Rat(0), Rat(5), Rat(10)}) {
            std::set<oracle::BasketKey> keys;
            for (const auto& b : enumerate_baskets(J, budget)) keys.insert(oracle::key_of(b));
            EXPECT(keys == oracle::naive_baskets(J, budget, 12, 7));
        }

    std::string single = to_json_string(threefold_sieve(23, 66, StageSet::all(), 1));
    std::string quad = to_json_string(threefold_sieve(23, 66, StageSet::all(), 4));
    EXPECT(single == quad);
    EXPECT(to_json_string(surface_sieve(3, 9, 1)) == to_json_string(surface_sieve(3, 9, 4)));
    return out;
}

struct Criterion {
    int id;
    const char* summary;
    Outcome (*fn)();
    double time_limit_s;  // 0 = no limit stated
};

const Criterion kCriteria[] = {
    {1, "Gorenstein WPS enumeration (14 spaces, index set, witnesses, degree-72 pair)",
     criterion1, 1.0},
    {2, "brute-force weight scan reproduces the 14 Gorenstein spaces", criterion2, 10.0},
    {3, "budget stage on 23..66 leaves {24,26,28,30,36,40,42}", criterion3, 0},
    {4, "full pipeline on 23..66 leaves {24,30,42}; q=40 fails at s=5 on all 40 assignments; "
        "26/28/36 fall at rr",
     criterion4, 60.0},
    {5, "q=17 and q=19 eliminated at the budget stage with J = q", criterion5, 0},
    {6, "surface sieve: empty in 7..9, {3,4,5,6} in 3..6", criterion6, 0},
    {7, "phi_index_set(20, {60}): max 66, excludes 60, contains {1,2,3,4,6}", criterion7, 0},
    {8, "property suites: rational oracle, rr oracle, basket oracle, determinism",
     criterion8, 0},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome out = c.fn();
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
            out.pass = false;
            out.detail << " [over time limit " << c.time_limit_s << "s]";
        }
        std::printf("criterion %d: %s (%.2fs) - %s%s\n", c.id, out.pass ? "PASS" : "FAIL",
                    elapsed, c.summary, out.detail.str().c_str());
        if (!out.pass) ++failures;
    }
    return failures;
}
