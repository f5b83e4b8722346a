#pragma once

#include "burnside/amitsur.hpp"

namespace burnside {

struct RepairResult {
    std::vector<IntMat> dprime;  // 1..N, same orientation as the input
    std::vector<IntMat> sprime;  // 0..N-1
    std::vector<std::string> certificate;
    std::vector<int> changed_degrees;
    Int modulus = 0;
};

// Inductive contraction repair for a filtered pseudo-complex with a finite
// filtration (F_{D+1} = 0) and a filtration-preserving pseudo-contraction.
// Validates first that boundaries and homotopies preserve the filtration and
// that every graded subquotient is genuinely contracted.
RepairResult repair_pseudo_complex(const ChainData& c);

// Same induction over the coefficients mod 2^k for the two-power filtration
// F_i = 2^i C (or any filtration whose defects are divisible by 2).
RepairResult repair_filtered_truncated(const ChainData& c, int k);

}  // namespace burnside
