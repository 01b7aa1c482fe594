#include "rulerfold/density.hpp"

#include <algorithm>
#include <string>

#include "rulerfold/errors.hpp"

namespace rulerfold {

namespace {

const Rational kHalf(1, 2);

void require_step(const Rational& a, const char* what) {
    if (a.sign() < 0 || a > Rational(1)) {
        throw InputError(std::string(what) + " = " + a.str() + " must lie in [0, 1]");
    }
}

// Builds a density on [-1, 1] whose pieces are delimited by `cuts` (clipped
// to the interval) and whose value on each piece is `value(midpoint)`.
template <class F>
PiecewiseConstantDensity tabulate(std::vector<Rational> cuts, F&& value) {
    const Rational lo(-1), hi(1);
    std::erase_if(cuts, [&](const Rational& c) { return c <= lo || c >= hi; });
    cuts.push_back(lo);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Rational> values;
    values.reserve(cuts.size() - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        values.push_back(value((cuts[i] + cuts[i + 1]) * kHalf));
    }
    return PiecewiseConstantDensity(std::move(cuts), std::move(values));
}

std::vector<Rational> shifted(std::span<const Rational> points, const Rational& by) {
    std::vector<Rational> out;
    out.reserve(points.size());
    for (const Rational& p : points) out.push_back(p + by);
    return out;
}

// Pointwise forms, valid away from breakpoints.
Rational gamma_minus_at(const PiecewiseConstantDensity& q, const Rational& a, const Rational& x) {
    const Rational one(1);
    if (x < one - a - a) return kHalf * q.value_at(x + a);
    if (x < one - a) return q.value_at(x + a);
    return Rational(0);
}

Rational gamma_plus_at(const PiecewiseConstantDensity& q, const Rational& a, const Rational& x) {
    const Rational one(1);
    if (x > a + a - one) return kHalf * q.value_at(x - a);
    if (x > a - one) return q.value_at(x - a);
    return Rational(0);
}

std::vector<Rational> gamma_minus_cuts(const PiecewiseConstantDensity& q, const Rational& a) {
    std::vector<Rational> cuts = shifted(q.breakpoints(), -a);
    cuts.push_back(Rational(1) - a - a);
    cuts.push_back(Rational(1) - a);
    return cuts;
}

std::vector<Rational> gamma_plus_cuts(const PiecewiseConstantDensity& q, const Rational& a) {
    std::vector<Rational> cuts = shifted(q.breakpoints(), a);
    cuts.push_back(a - Rational(1));
    cuts.push_back(a + a - Rational(1));
    return cuts;
}

}  // namespace

PiecewiseConstantDensity::PiecewiseConstantDensity(std::vector<Rational> breakpoints, std::vector<Rational> values) {
    if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size()) {
        throw InputError("density needs k+1 breakpoints for k values (got " + std::to_string(breakpoints.size()) +
                         " breakpoints, " + std::to_string(values.size()) + " values)");
    }
    if (breakpoints.front() != Rational(-1) || breakpoints.back() != Rational(1)) {
        throw InputError("density breakpoints must run from -1 to 1");
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) throw InputError("density breakpoints must be strictly increasing");
        if (values[i].sign() < 0) throw InputError("density value " + values[i].str() + " is negative");
    }

    breakpoints_.push_back(std::move(breakpoints.front()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values_.empty() && values_.back() == values[i]) {
            breakpoints_.back() = std::move(breakpoints[i + 1]);
        } else {
            values_.push_back(std::move(values[i]));
            breakpoints_.push_back(std::move(breakpoints[i + 1]));
        }
    }
}

const Rational& PiecewiseConstantDensity::value_at(const Rational& x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back()) {
        throw InputError("density evaluated outside [-1, 1] at " + x.str());
    }
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t piece = static_cast<std::size_t>(it - breakpoints_.begin());
    piece = piece == 0 ? 0 : piece - 1;
    return values_[std::min(piece, values_.size() - 1)];
}

Rational PiecewiseConstantDensity::integral() const {
    Rational total;
    for (std::size_t i = 0; i < values_.size(); ++i) total += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
    return total;
}

Rational PiecewiseConstantDensity::integral_over(const Rational& lo, const Rational& hi) const {
    Rational total;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const Rational& l = max(breakpoints_[i], lo);
        const Rational& r = min(breakpoints_[i + 1], hi);
        if (l < r) total += values_[i] * (r - l);
    }
    return total;
}

PiecewiseConstantDensity PiecewiseConstantDensity::reflect() const {
    std::vector<Rational> b;
    b.reserve(breakpoints_.size());
    for (auto it = breakpoints_.rbegin(); it != breakpoints_.rend(); ++it) b.push_back(-*it);
    std::vector<Rational> v(values_.rbegin(), values_.rend());
    return PiecewiseConstantDensity(std::move(b), std::move(v));
}

PiecewiseConstantDensity uniform_density() { return PiecewiseConstantDensity({Rational(-1), Rational(1)}, {kHalf}); }

PiecewiseConstantDensity gamma_minus(const PiecewiseConstantDensity& q, const Rational& a) {
    require_step(a, "step a");
    return tabulate(gamma_minus_cuts(q, a), [&](const Rational& x) { return gamma_minus_at(q, a, x); });
}

PiecewiseConstantDensity gamma_plus(const PiecewiseConstantDensity& q, const Rational& a) {
    require_step(a, "step a");
    return tabulate(gamma_plus_cuts(q, a), [&](const Rational& x) { return gamma_plus_at(q, a, x); });
}

PiecewiseConstantDensity phi(const PiecewiseConstantDensity& q, const Rational& a) {
    require_step(a, "step a");
    std::vector<Rational> cuts = gamma_minus_cuts(q, a);
    std::vector<Rational> plus = gamma_plus_cuts(q, a);
    cuts.insert(cuts.end(), std::make_move_iterator(plus.begin()), std::make_move_iterator(plus.end()));
    return tabulate(std::move(cuts),
                    [&](const Rational& x) { return gamma_minus_at(q, a, x) + gamma_plus_at(q, a, x); });
}

PiecewiseConstantDensity operator+(const PiecewiseConstantDensity& p, const PiecewiseConstantDensity& q) {
    std::vector<Rational> cuts(p.breakpoints().begin(), p.breakpoints().end());
    cuts.insert(cuts.end(), q.breakpoints().begin(), q.breakpoints().end());
    return tabulate(std::move(cuts), [&](const Rational& x) { return p.value_at(x) + q.value_at(x); });
}

std::vector<PiecewiseConstantDensity> pipeline(const RulerInstance& instance) {
    const std::size_t n = instance.size();
    if (n % 4 != 0) {
        throw InputError("the density pipeline needs n = 4m steps (got n = " + std::to_string(n) + ")");
    }
    const std::size_t mid = n / 2;  // 2m
    std::vector<PiecewiseConstantDensity> q(n + 1, uniform_density());
    for (std::size_t i = mid; i < n; ++i) q[i + 1] = phi(q[i], instance[i]);        // a_{i+1}
    for (std::size_t i = mid; i >= 1; --i) q[i - 1] = phi(q[i], instance[i - 1]);  // a_i
    return q;
}

Rational fringe_mass(const PiecewiseConstantDensity& q, const Rational& eps) {
    if (eps.sign() <= 0 || eps > Rational(2)) throw InputError("fringe width eps = " + eps.str() + " must lie in (0, 2]");
    const Rational w = eps * kHalf;
    const Rational one(1);
    return q.integral_over(-one, w - one) + q.integral_over(one - w, one);
}

Rational max_density(const PiecewiseConstantDensity& q) {
    return *std::max_element(q.values().begin(), q.values().end());
}

ClaimReport claim_check(const PiecewiseConstantDensity& q, const Rational& b, const Rational& b2) {
    require_step(b, "b");
    require_step(b2, "b2");
    if (b + b2 <= Rational(1)) {
        throw InputError("the doubling claim needs b + b2 > 1 (got " + b.str() + " + " + b2.str() + ")");
    }
    ClaimReport report;
    const PiecewiseConstantDensity q1 = phi(q, b);
    report.max_q = max_density(q);
    report.max_q1 = max_density(q1);
    report.max_q2 = max_density(phi(q1, b2));
    report.holds = report.max_q2 <= Rational(2) * report.max_q;
    return report;
}

Rational certificate_epsilon(int m) {
    if (m < 1) throw InputError("certificate needs m >= 1");
    return Rational(1) / (pow2(m + 3) - Rational(7));
}

BoundCertificate certify_upper_bound(const RulerInstance& instance, const std::optional<Rational>& epsilon_override) {
    const std::size_t n = instance.size();
    if (n % 4 != 0) {
        throw InputError("certificate needs n = 4m steps (got n = " + std::to_string(n) +
                         "); pad the instance with zeros to a multiple of 4");
    }
    if (!adjacent_sums_exceed_one(instance)) {
        throw InputError("certificate needs every adjacent pair to sum to more than 1; run merge_reduce first");
    }

    BoundCertificate cert;
    cert.m = static_cast<int>(n / 4);
    cert.epsilon = epsilon_override ? *epsilon_override : certificate_epsilon(cert.m);
    if (cert.epsilon.sign() <= 0 || cert.epsilon > Rational(2)) {
        throw InputError("epsilon = " + cert.epsilon.str() + " must lie in (0, 2]");
    }
    for (const PiecewiseConstantDensity& q : pipeline(instance)) {
        cert.fringe_masses.push_back(fringe_mass(q, cert.epsilon));
        cert.total += cert.fringe_masses.back();
    }
    cert.holds = cert.total <= Rational(1);
    return cert;
}

}  // namespace rulerfold
