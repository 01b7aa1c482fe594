#pragma once

// Seeded simulation of the reflected random walk, for comparison with the
// exact densities produced by phi and pipeline.

#include <cstdint>
#include <span>
#include <vector>

#include "rulerfold/density.hpp"
#include "rulerfold/instance.hpp"
#include "rulerfold/rational.hpp"

namespace rulerfold {

struct MonteCarloHistogram {
    std::vector<Rational> edges;         // -1 = e_0 < e_1 < ... < e_k = 1
    std::vector<std::uint64_t> counts;   // particles finishing in (e_j, e_{j+1})
    std::uint64_t samples = 0;
};

/// Starts `samples` particles uniformly on [-1, 1] and applies one walk step
/// per entry of `steps`. Positions live on an integer lattice finer than
/// every step length and edge, offset by half a cell so that no particle
/// ever sits exactly on a wall threshold or bin edge; bin masses therefore
/// follow the continuous process exactly in distribution.
/// Throws InputError for samples == 0, steps outside [0, 1], malformed
/// edges, or denominators too large for the lattice.
MonteCarloHistogram monte_carlo_walk(std::span<const Rational> steps, std::uint64_t samples, std::uint64_t seed,
                                     std::span<const Rational> edges);

/// Forward half of the pipeline: steps a_{2m+1} .. a_{4m} from the uniform
/// start q_{2m}, binned on the breakpoints of the exact q_{4m}.
MonteCarloHistogram monte_carlo_walk(const RulerInstance& instance, std::uint64_t samples, std::uint64_t seed);

/// Exact mass of q in each histogram bin.
std::vector<Rational> bin_masses(const PiecewiseConstantDensity& q, std::span<const Rational> edges);

}  // namespace rulerfold
