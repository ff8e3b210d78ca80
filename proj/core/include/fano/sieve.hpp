#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fano/basket.hpp"
#include "fano/rational.hpp"
#include "fano/rr.hpp"

namespace fano {

// Numerical candidate for a Q-Fano index q: J is the codimension-2
// Cartier index of the ample generator, degree its anticanonical degree
// ((-K)^3 for 3-folds, (-K)^2 for surfaces), and k the multiplier with
// degree = q*(q/J)*k.
struct Candidate {
    std::int64_t q = 0;
    std::int64_t J = 0;
    std::int64_t degree = 0;
    std::int64_t k = 0;

    bool operator==(const Candidate&) const = default;
};

enum class Stage {
    divisibility,   // J | q and q^2 | J*degree (holds by construction)
    degree_bound,   // parity / ceiling constraints on the degree
    budget,         // j_budget_term(J) vs the Kawamata-Miyaoka budget
    basket_empty,   // no basket fits the budget with J | lcm
    basket,         // survived through basket enumeration (rr disabled)
    rr,             // Riemann-Roch integrality over residue assignments
};

std::string stage_name(Stage s);

// Toggleable pipeline stages. The divisibility and degree-bound checks
// are candidate invariants and always apply; rr consumes enumerated
// baskets, so enabling rr enables basket.
struct StageSet {
    bool budget = true;
    bool basket = true;
    bool rr = true;

    static StageSet all() { return StageSet{}; }
    static StageSet none() { return StageSet{false, false, false}; }
    // Comma-separated list of: all, budget, basket, rr, divisibility,
    // degree-bound. Throws std::invalid_argument on unknown tokens.
    static StageSet parse(const std::string& text);

    std::vector<std::string> names() const;  // echo, invariant stages included
    bool operator==(const StageSet&) const = default;
};

struct DegreeBoundWitness {
    std::string reason;  // "odd-degree" | "degree-ceiling"
};
struct BudgetWitness {
    Rat j_term;
    Rat budget;
};
struct BasketEmptyWitness {
    Rat budget;
};
struct BasketSurvivalWitness {
    std::int64_t basket_count = 0;
    Basket first;
};
struct RrBasketOutcome {
    Basket basket;
    RrVerdict verdict;
};
struct RrEliminationWitness {
    std::vector<RrBasketOutcome> baskets;  // all inadmissible
};
struct RrSurvivalWitness {
    Basket basket;
    std::vector<std::int64_t> assignment;
};

using Witness = std::variant<std::monostate, DegreeBoundWitness, BudgetWitness,
                             BasketEmptyWitness, BasketSurvivalWitness,
                             RrEliminationWitness, RrSurvivalWitness>;

struct Verdict {
    Candidate candidate;
    bool survived = false;
    Stage stage = Stage::divisibility;  // elimination stage, or last stage passed
    Witness witness;
};

struct SieveReport {
    std::string kind;  // "threefold-sieve" | "surface-sieve"
    std::int64_t q_min = 0;
    std::int64_t q_max = 0;
    std::vector<std::string> stages;
    std::vector<Verdict> verdicts;  // q asc, then J desc, then degree asc
    std::vector<std::int64_t> survivors;
    std::vector<std::int64_t> discrepancies;  // survivors the source arguments exclude
};

// All valid 3-fold candidates for q >= 3: J | q, degree = q*(q/J)*k even,
// <= 70 (72 additionally allowed iff q is 6 or 12), sorted (J desc,
// degree asc). Rejects q < 3.
std::vector<Candidate> enumerate_candidates(std::int64_t q);

// Budget stage for one 3-fold candidate; the witness records both sides
// of the inequality exactly.
Verdict budget_filter(const Candidate& c);

// Full 3-fold pipeline over [q_min, q_max]. workers = 0 picks the
// hardware concurrency; output is identical for any worker count.
SieveReport threefold_sieve(std::int64_t q_min, std::int64_t q_max,
                            const StageSet& stages = StageSet::all(), unsigned workers = 0);

// Du Val del Pezzo surface pipeline: candidates (q, J, c1^2) with
// J | q, q^2 | J*c1^2, 1 <= c1^2 <= 9; a candidate is eliminated iff the
// minimal point-basket cost j_budget_term(J) exceeds 12 - (5/4)*c1^2.
SieveReport surface_sieve(std::int64_t q_min, std::int64_t q_max, unsigned workers = 0);

// Survivors that the classification arguments rule out for the given
// stage set; nonempty means the run contradicts the expected index list
// (CLI exit code 1). Exposed so the flagging logic is testable.
std::vector<std::int64_t> paper_discrepancies(const std::string& kind, const StageSet& stages,
                                              const std::vector<std::int64_t>& survivors);

// FANO_SIEVE_THREADS environment variable (0 or unset = auto).
unsigned worker_count_from_env();

}  // namespace fano
