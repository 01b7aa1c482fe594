#pragma once

// Heuristic lower bounds on the fit p_n = max_a f(a).

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rulerfold/instance.hpp"
#include "rulerfold/rational.hpp"
#include "rulerfold/solvers.hpp"

namespace rulerfold {

enum class SearchMethod { Grid, Local, ExtremalSeeded };

std::string_view to_string(SearchMethod method);

struct FitEstimate {
    std::size_t n = 0;
    RulerInstance best_instance{Rational(1)};
    Rational best_value;  // exact f(best_instance)
    SearchMethod method = SearchMethod::Grid;
    std::uint64_t iterations = 0;  // step-cover evaluations spent
    std::uint64_t seed = 0;
};

struct SearchOptions {
    std::size_t max_n = kDefaultBruteForceLimit;
    /// Grids use denominators 2, 4, ..., up to this value.
    std::uint64_t max_denominator = 64;
    /// Extra starting points (each of length n), e.g. padded champions.
    std::vector<RulerInstance> seeds;
};

/// Seeded random restarts on dyadic grids plus coordinate-wise local moves,
/// each candidate scored by its exact step-cover. `budget` caps the number
/// of evaluations. For n >= 3 the extremal instance with 4m - 1 <= n (padded
/// with zeros) is always scored. Throws SizeLimitError if n > options.max_n.
FitEstimate fit_lower_bound_search(std::size_t n, std::uint64_t budget, std::uint64_t seed,
                                   const SearchOptions& options = {});

struct MonotonicityEntry {
    std::size_t n = 0;
    Rational value;        // after repair
    bool deficient = false;  // the search result was below the previous n's champion
    Rational upper_bound;  // 2 - 1/(2^{m+3} - 7), m = ceil(n/4)
    bool within_upper_bound = true;
};

struct MonotonicityReport {
    std::vector<FitEstimate> repaired;
    std::vector<MonotonicityEntry> entries;
    bool padding_preserved = true;  // every padded champion kept its value
    bool upper_bounds_ok = true;

    bool ok() const { return padding_preserved && upper_bounds_ok; }
};

/// Checks that best values are nondecreasing in n. A value below its
/// predecessor is flagged and replaced by the predecessor's champion padded
/// with zeros. Also flags any value above the certified upper bound, which
/// would indicate a solver defect. Requires consecutive n.
MonotonicityReport fit_monotonicity_check(std::vector<FitEstimate> results);

}  // namespace rulerfold
