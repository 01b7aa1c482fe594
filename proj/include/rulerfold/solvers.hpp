#pragma once

// Exact step-cover solvers and the greedy range <= 2 folding.

#include <cstddef>
#include <cstdint>

#include "rulerfold/instance.hpp"
#include "rulerfold/rational.hpp"

namespace rulerfold {

inline constexpr std::size_t kDefaultBruteForceLimit = 24;

struct StepCoverResult {
    Rational value;       // f(a)
    SignVector witness;   // lexicographically smallest optimum, zero steps forced to Plus
    std::uint64_t explored = 0;  // search nodes visited
};

/// Exhaustive minimum over every sign vector. Throws SizeLimitError when
/// n exceeds max_n; use branch_and_bound_step_cover for larger instances.
StepCoverResult brute_force_step_cover(const RulerInstance& instance,
                                       std::size_t max_n = kDefaultBruteForceLimit);

struct BranchAndBoundOptions {
    /// 0 means unlimited. Reaching the cap throws SizeLimitError; it never
    /// changes the reported value or witness.
    std::uint64_t node_limit = 0;
};

/// Same value and witness contract as brute_force_step_cover. Fixes the
/// first nonzero step by global sign symmetry, explores Plus before Minus
/// and prunes any partial assignment whose range already reaches the
/// incumbent, which is seeded from greedy_fold.
StepCoverResult branch_and_bound_step_cover(const RulerInstance& instance,
                                            const BranchAndBoundOptions& options = {});

/// Convenience: f(a) via branch and bound.
Rational step_cover(const RulerInstance& instance);

struct GreedyFolding {
    SignVector signs;
    FoldingEvaluation evaluation;
};

/// e_i = -1 if s_{i-1} > 0, otherwise +1. Keeps every |s_i| <= 1.
/// Zero steps are reported as +1, as in the solvers.
GreedyFolding greedy_fold(const RulerInstance& instance);

}  // namespace rulerfold
