#pragma once

#include <cstdint>
#include <vector>

#include "fano/basket.hpp"
#include "fano/rational.hpp"

namespace fano {

// Correction term -w(r-w)/(2r) with w = (s*x) mod r, contributed by a
// transverse A_{r-1} curve with residue parameter x. Zero iff r | s*x.
// Rejects r < 2 and x outside [0, r).
Rat rr_correction(std::int64_t s, std::int64_t x, std::int64_t r);

// s^2 * c1^3 / (2q^2) plus the degree-weighted corrections of a basket
// whose records all carry residues. Integrality of this value for every
// 0 < s < q is the orbifold Riemann-Roch constraint.
// Rejects s outside (0, q) and records with missing residues.
Rat rr_lhs(std::int64_t q, const Rat& c1_cubed, const Basket& b, std::int64_t s);

struct RrAssignmentFailure {
    std::vector<std::int64_t> assignment;  // residues, aligned with basket records
    std::int64_t failing_s;                // minimal s in (0, q) with non-integral lhs
};

struct RrVerdict {
    bool admissible = false;
    std::int64_t assignment_count = 0;

    // Admissible case: the lexicographically smallest working assignment.
    std::vector<std::int64_t> assignment;

    // Inadmissible case: minimal failing s per assignment (lexicographic
    // order), and the sorted s-values that fail under *every* assignment
    // (may be empty when no single s kills all assignments).
    std::vector<RrAssignmentFailure> failures;
    std::vector<std::int64_t> uniform_failing_s;
};

// Exhaustive search over all residue assignments (x_C in [0, r_C) per
// record, independently): admissible iff some assignment makes rr_lhs an
// integer for all 0 < s < q. Basket records must carry no residues.
RrVerdict rr_admissible(std::int64_t q, const Rat& c1_cubed, const Basket& b);

}  // namespace fano
