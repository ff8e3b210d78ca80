#include "fano/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fano/arith.hpp"

namespace fano {

std::string stage_name(Stage s) {
    switch (s) {
        case Stage::divisibility: return "divisibility";
        case Stage::degree_bound: return "degree-bound";
        case Stage::budget: return "budget";
        case Stage::basket_empty: return "basket-empty";
        case Stage::basket: return "basket";
        case Stage::rr: return "rr";
    }
    return "?";
}

StageSet StageSet::parse(const std::string& text) {
    StageSet set = StageSet::none();
    std::stringstream ss(text);
    std::string token;
    bool any = false;
    while (std::getline(ss, token, ',')) {
        any = true;
        if (token == "all") {
            set = StageSet::all();
        } else if (token == "budget") {
            set.budget = true;
        } else if (token == "basket") {
            set.basket = true;
        } else if (token == "rr") {
            set.rr = true;
        } else if (token == "divisibility" || token == "degree-bound") {
            // candidate invariants, always applied
        } else {
            throw std::invalid_argument("unknown stage '" + token + "'");
        }
    }
    if (!any) throw std::invalid_argument("empty stage list");
    if (set.rr) set.basket = true;
    return set;
}

std::vector<std::string> StageSet::names() const {
    std::vector<std::string> names{"divisibility", "degree-bound"};
    if (budget) names.push_back("budget");
    if (basket) names.push_back("basket");
    if (rr) names.push_back("rr");
    return names;
}

namespace {

constexpr std::int64_t kDegreeCeiling = 72;

bool degree72_allowed(std::int64_t q) { return q == 6 || q == 12; }

std::vector<std::int64_t> divisors_descending(std::int64_t q) {
    std::vector<std::int64_t> divs;
    for (std::int64_t j = q; j >= 1; --j)
        if (q % j == 0) divs.push_back(j);
    return divs;
}

// Candidate tuple plus the reason it fails the degree constraints, if any.
struct RawTuple {
    Candidate c;
    std::optional<std::string> degree_reason;
};

// All tuples (J | q, degree = q*(q/J)*k <= 72), J desc then degree asc.
std::vector<RawTuple> threefold_tuples(std::int64_t q) {
    std::vector<RawTuple> tuples;
    for (std::int64_t J : divisors_descending(q)) {
        for (std::int64_t k = 1;; ++k) {
            std::int64_t degree = q * (q / J) * k;
            if (degree > kDegreeCeiling) break;
            RawTuple t{Candidate{q, J, degree, k}, std::nullopt};
            if (degree % 2 != 0)
                t.degree_reason = "odd-degree";
            else if (degree > 70 && !degree72_allowed(q))
                t.degree_reason = "degree-ceiling";
            tuples.push_back(std::move(t));
        }
    }
    return tuples;
}

Verdict verdict_for_candidate(const Candidate& c, const StageSet& stages) {
    if (stages.budget) {
        Verdict v = budget_filter(c);
        if (!v.survived || !stages.basket) return v;
    }
    if (!stages.basket) {
        // No computational stage enabled; the candidate stands on its
        // invariants alone.
        return Verdict{c, true, Stage::degree_bound, std::monostate{}};
    }

    const Rat budget = km_budget_3fold(Rat(c.degree));
    std::vector<Basket> baskets = enumerate_baskets(c.J, budget);
    if (baskets.empty())
        return Verdict{c, false, Stage::basket_empty, BasketEmptyWitness{budget}};
    if (!stages.rr)
        return Verdict{c, true, Stage::basket,
                       BasketSurvivalWitness{static_cast<std::int64_t>(baskets.size()),
                                             baskets.front()}};

    RrEliminationWitness elimination;
    for (const Basket& b : baskets) {
        RrVerdict rv = rr_admissible(c.q, Rat(c.degree), b);
        if (rv.admissible)
            return Verdict{c, true, Stage::rr, RrSurvivalWitness{b, rv.assignment}};
        elimination.baskets.push_back({b, std::move(rv)});
    }
    return Verdict{c, false, Stage::rr, std::move(elimination)};
}

std::vector<Verdict> threefold_verdicts_for_q(std::int64_t q, const StageSet& stages) {
    std::vector<Verdict> verdicts;
    for (const RawTuple& t : threefold_tuples(q)) {
        if (t.degree_reason) {
            verdicts.push_back(Verdict{t.c, false, Stage::degree_bound,
                                       DegreeBoundWitness{*t.degree_reason}});
            continue;
        }
        verdicts.push_back(verdict_for_candidate(t.c, stages));
    }
    return verdicts;
}

// Surface budget: 12 - (5/4)*c1^2; nonnegative forces c1^2 <= 9.
constexpr std::int64_t kSurfaceDegreeCeiling = 9;

Rat surface_budget(std::int64_t c1_squared) {
    return Rat(12) - Rat(5, 4) * Rat(c1_squared);
}

std::vector<Verdict> surface_verdicts_for_q(std::int64_t q) {
    std::vector<Verdict> verdicts;
    for (std::int64_t J : divisors_descending(q)) {
        for (std::int64_t k = 1;; ++k) {
            std::int64_t c1sq = q * (q / J) * k;
            if (c1sq > kSurfaceDegreeCeiling) break;
            Candidate c{q, J, c1sq, k};
            Rat j_term = j_budget_term(J);
            Rat budget = surface_budget(c1sq);
            bool ok = j_term <= budget;
            verdicts.push_back(Verdict{c, ok, Stage::budget, BudgetWitness{j_term, budget}});
        }
    }
    return verdicts;
}

// Runs fn(q) for each q in [q_min, q_max] across `workers` threads and
// returns the results in q order regardless of schedule.
template <typename Fn>
std::vector<std::vector<Verdict>> run_over_range(std::int64_t q_min, std::int64_t q_max,
                                                 unsigned workers, Fn fn) {
    const std::size_t count = static_cast<std::size_t>(q_max - q_min + 1);
    std::vector<std::vector<Verdict>> per_q(count);
    unsigned n = workers != 0 ? workers : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, count));
    if (n <= 1) {
        for (std::size_t i = 0; i < count; ++i) per_q[i] = fn(q_min + static_cast<std::int64_t>(i));
        return per_q;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            per_q[i] = fn(q_min + static_cast<std::int64_t>(i));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return per_q;
}

SieveReport assemble(std::string kind, std::int64_t q_min, std::int64_t q_max,
                     const StageSet& stages, std::vector<std::vector<Verdict>> per_q) {
    SieveReport report;
    report.kind = std::move(kind);
    report.q_min = q_min;
    report.q_max = q_max;
    report.stages = stages.names();
    std::set<std::int64_t> survivors;
    for (auto& block : per_q)
        for (auto& v : block) {
            if (v.survived) survivors.insert(v.candidate.q);
            report.verdicts.push_back(std::move(v));
        }
    report.survivors.assign(survivors.begin(), survivors.end());
    report.discrepancies = paper_discrepancies(report.kind, stages, report.survivors);
    return report;
}

}  // namespace

std::vector<Candidate> enumerate_candidates(std::int64_t q) {
    if (q < 3) throw std::invalid_argument("enumerate_candidates: q must be at least 3");
    std::vector<Candidate> candidates;
    for (const RawTuple& t : threefold_tuples(q))
        if (!t.degree_reason) candidates.push_back(t.c);
    return candidates;
}

Verdict budget_filter(const Candidate& c) {
    if (c.q < 3) throw std::invalid_argument("budget_filter: q must be at least 3");
    Rat j_term = j_budget_term(c.J);
    Rat budget = km_budget_3fold(Rat(c.degree));
    bool ok = j_term <= budget;
    return Verdict{c, ok, Stage::budget, BudgetWitness{j_term, budget}};
}

SieveReport threefold_sieve(std::int64_t q_min, std::int64_t q_max, const StageSet& stages,
                            unsigned workers) {
    if (q_min < 3 || q_min > q_max)
        throw std::invalid_argument("threefold_sieve: need 3 <= q_min <= q_max");
    auto per_q = run_over_range(q_min, q_max, workers,
                                [&](std::int64_t q) { return threefold_verdicts_for_q(q, stages); });
    return assemble("threefold-sieve", q_min, q_max, stages, std::move(per_q));
}

SieveReport surface_sieve(std::int64_t q_min, std::int64_t q_max, unsigned workers) {
    if (q_min < 3 || q_min > q_max)
        throw std::invalid_argument("surface_sieve: need 3 <= q_min <= q_max");
    StageSet stages{true, false, false};
    auto per_q = run_over_range(q_min, q_max, workers,
                                [&](std::int64_t q) { return surface_verdicts_for_q(q); });
    return assemble("surface-sieve", q_min, q_max, stages, std::move(per_q));
}

std::vector<std::int64_t> paper_discrepancies(const std::string& kind, const StageSet& stages,
                                              const std::vector<std::int64_t>& survivors) {
    std::vector<std::int64_t> flagged;
    if (kind == "surface-sieve") {
        for (std::int64_t q : survivors)
            if (q > 6) flagged.push_back(q);
        return flagged;
    }
    if (!stages.budget && !stages.basket && !stages.rr) return flagged;
    // Indices above 22 that survive the enabled stages.
    static const std::set<std::int64_t> kBudgetSurvivors{24, 26, 28, 30, 36, 40, 42};
    static const std::set<std::int64_t> kFullSurvivors{24, 30, 42};
    const auto& allowed = stages.rr ? kFullSurvivors : kBudgetSurvivors;
    for (std::int64_t q : survivors)
        if (q > 22 && !allowed.contains(q)) flagged.push_back(q);
    return flagged;
}

unsigned worker_count_from_env() {
    const char* raw = std::getenv("FANO_SIEVE_THREADS");
    if (raw == nullptr) return 0;
    char* end = nullptr;
    long n = std::strtol(raw, &end, 10);
    if (end == raw || n < 0) return 0;
    return static_cast<unsigned>(n);
}

}  // namespace fano
