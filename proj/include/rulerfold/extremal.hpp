#pragma once

// Lower-bound instances with n = 4m - 1 whose step-cover is exactly
// 2 - delta, delta = 1 / (3 * 2^{m-1} - 1).

#include <cstddef>
#include <cstdint>
#include <map>

#include "rulerfold/instance.hpp"
#include "rulerfold/rational.hpp"
#include "rulerfold/solvers.hpp"

namespace rulerfold {

struct ExtremalInstance {
    int m = 0;
    Rational delta;
    RulerInstance instance;
};

/// delta = 1 / (3 * 2^{m-1} - 1).
Rational extremal_delta(int m);

/// Odd positions are 1; even positions dip towards the middle step a_{2m}.
/// Throws InputError for m < 1.
ExtremalInstance build_extremal(int m);

/// Range of the folding +-+-...; equals 2 - delta.
Rational alternating_range(const ExtremalInstance& ext);

struct LowerBoundReport {
    Rational bound;           // 2 - delta
    Rational min_range;       // f over all sign vectors
    std::uint64_t count_at_min = 0;
    std::uint64_t total = 0;  // 2^n
    std::map<Rational, std::uint64_t> histogram;  // range -> number of sign vectors
    Rational alternating;     // range of +-+-...
    std::uint64_t non_alternating_below_bound = 0;

    /// Every folding reaches the bound and the alternating one attains it.
    bool holds() const { return min_range == bound && alternating == bound && non_alternating_below_bound == 0; }
};

/// Enumerates all 2^n foldings. Throws SizeLimitError when 4m - 1 > max_n.
LowerBoundReport verify_lower_bound(const ExtremalInstance& ext, std::size_t max_n = kDefaultBruteForceLimit);

}  // namespace rulerfold
