#pragma once

/**
 * @file density.hpp
 * @brief Exact piecewise-constant densities on [-1, 1] and the reflected
 *        random-walk operators used by the upper-bound certificate.
 *
 * One step of the walk with step size a moves a particle at x to x + a
 * when x is within a of the left wall, to x - a when within a of the
 * right wall, and otherwise left or right with probability 1/2 each.
 * gamma_minus and gamma_plus are the densities of the leftward and
 * rightward moves; phi is their sum, the density after the step.
 *
 * Densities are stored as open-interval pieces, so values at individual
 * breakpoints are never observed. Every operator returns a canonical
 * density: sorted breakpoints and no two adjacent pieces with equal value.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rulerfold/instance.hpp"
#include "rulerfold/rational.hpp"

namespace rulerfold {

class PiecewiseConstantDensity {
public:
    /// breakpoints: strictly increasing from -1 to 1; values: one nonnegative
    /// value per interval. Throws InputError otherwise. The result is
    /// coalesced into canonical form.
    PiecewiseConstantDensity(std::vector<Rational> breakpoints, std::vector<Rational> values);

    std::span<const Rational> breakpoints() const { return breakpoints_; }
    std::span<const Rational> values() const { return values_; }
    std::size_t piece_count() const { return values_.size(); }

    /// Value of the piece containing x, for -1 <= x <= 1. At an interior
    /// breakpoint the piece to the right is used (densities are defined
    /// almost everywhere only).
    const Rational& value_at(const Rational& x) const;

    Rational integral() const;
    /// Integral over [lo, hi] intersected with [-1, 1].
    Rational integral_over(const Rational& lo, const Rational& hi) const;

    /// x -> -x.
    PiecewiseConstantDensity reflect() const;

    friend bool operator==(const PiecewiseConstantDensity&, const PiecewiseConstantDensity&) = default;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

/// Density 1/2 on [-1, 1].
PiecewiseConstantDensity uniform_density();

/// 1/2 q(x+a) on [-1, 1-2a], q(x+a) on [1-2a, 1-a], 0 on [1-a, 1].
PiecewiseConstantDensity gamma_minus(const PiecewiseConstantDensity& q, const Rational& a);

/// Mirror image of gamma_minus: 0 on [-1, -1+a], q(x-a) on [-1+a, -1+2a],
/// 1/2 q(x-a) on [-1+2a, 1].
PiecewiseConstantDensity gamma_plus(const PiecewiseConstantDensity& q, const Rational& a);

/// gamma_minus + gamma_plus. Conserves total mass.
PiecewiseConstantDensity phi(const PiecewiseConstantDensity& q, const Rational& a);

/// Pointwise sum.
PiecewiseConstantDensity operator+(const PiecewiseConstantDensity& p, const PiecewiseConstantDensity& q);

/// q_0 .. q_{4m} for an instance with n = 4m: q_{2m} is uniform and the
/// walk is run outwards in both directions, q_{i+1} = phi(q_i, a_{i+1}) for
/// i >= 2m and q_{i-1} = phi(q_i, a_i) for i <= 2m. Throws InputError if n
/// is not a multiple of 4. Adjacent sums above 1 are expected but not
/// required.
std::vector<PiecewiseConstantDensity> pipeline(const RulerInstance& instance);

/// Mass within eps/2 of either wall. Requires 0 < eps <= 2.
Rational fringe_mass(const PiecewiseConstantDensity& q, const Rational& eps);

Rational max_density(const PiecewiseConstantDensity& q);

struct ClaimReport {
    Rational max_q;    // max q
    Rational max_q1;   // max phi(q, b)
    Rational max_q2;   // max phi(phi(q, b), b2)
    bool holds = false;  // max_q2 <= 2 max_q
};

/// Two walk steps whose lengths sum to more than 1 at most double the peak
/// density. Requires b, b2 in [0, 1] and b + b2 > 1.
ClaimReport claim_check(const PiecewiseConstantDensity& q, const Rational& b, const Rational& b2);

/// 1 / (2^{m+3} - 7).
Rational certificate_epsilon(int m);

struct BoundCertificate {
    int m = 0;
    Rational epsilon;
    std::vector<Rational> fringe_masses;  // r_0 .. r_{4m}
    Rational total;
    bool holds = false;  // total <= 1
};

/// Runs the pipeline and sums the fringe masses. When the total is at most
/// 1 some folding of the instance has range at most 2 - epsilon.
/// Requires n = 4m and every adjacent pair summing to more than 1 (apply
/// merge_reduce first); epsilon defaults to certificate_epsilon(m).
BoundCertificate certify_upper_bound(const RulerInstance& instance,
                                     const std::optional<Rational>& epsilon_override = std::nullopt);

}  // namespace rulerfold
