#pragma once

// Random generators and independent oracles shared by the test suites.
// Oracles here deliberately avoid the library's search and density code:
// step-cover is enumerated over bitmasks in plain Rational arithmetic, and
// walk masses are computed from the particle-transport description.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "rulerfold/density.hpp"
#include "rulerfold/instance.hpp"
#include "rulerfold/rational.hpp"

namespace rulerfold::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_den, const Rational& lo = Rational(0),
                                const Rational& hi = Rational(1)) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    // Uniform over multiples of 1/den inside [lo, hi].
    const Rational span = (hi - lo) * Rational(den);
    const long steps = mpz_class(span.numerator() / span.denominator()).get_si();
    std::uniform_int_distribution<long> k(0, steps);
    return lo + Rational(k(rng), den);
}

inline RulerInstance random_instance(Rng& rng, std::size_t n, long max_den = 12) {
    std::vector<Rational> a(n);
    for (Rational& x : a) x = random_rational(rng, max_den);
    return RulerInstance(std::move(a));
}

inline RulerInstance random_instance(Rng& rng, std::size_t min_n, std::size_t max_n, long max_den) {
    std::uniform_int_distribution<std::size_t> nd(min_n, max_n);
    return random_instance(rng, nd(rng), max_den);
}

/// Random density with up to `max_pieces` pieces and integral exactly 1.
inline PiecewiseConstantDensity random_density(Rng& rng, std::size_t max_pieces, long max_den = 16) {
    std::uniform_int_distribution<std::size_t> pieces(1, max_pieces);
    std::vector<Rational> cuts{Rational(-1), Rational(1)};
    const std::size_t k = pieces(rng);
    while (cuts.size() < k + 1) {
        Rational c = random_rational(rng, max_den, Rational(-1), Rational(1));
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Rational> weights(k);
    std::uniform_int_distribution<long> w(0, 9);
    Rational mass;
    for (std::size_t i = 0; i < k; ++i) {
        weights[i] = Rational(w(rng));
        mass += weights[i] * (cuts[i + 1] - cuts[i]);
    }
    if (mass.is_zero()) {
        weights.assign(k, Rational(1));
        mass = Rational(2);
    }
    for (Rational& v : weights) v /= mass;
    return PiecewiseConstantDensity(std::move(cuts), std::move(weights));
}

/// Range of the folding encoded by `mask` (bit n-1-i set <=> e_{i+1} = +1).
inline Rational mask_range(const RulerInstance& a, std::uint64_t mask) {
    const std::size_t n = a.size();
    Rational s, hi, lo;
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> (n - 1 - i)) & 1) s += a[i];
        else s -= a[i];
        if (s > hi) hi = s;
        if (s < lo) lo = s;
    }
    return hi - lo;
}

inline SignVector mask_signs(std::size_t n, std::uint64_t mask) {
    std::vector<Sign> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> (n - 1 - i)) & 1 ? Sign::Plus : Sign::Minus;
    return SignVector(std::move(e));
}

struct OracleCover {
    Rational value;
    SignVector witness;
};

/// Step-cover by enumerating all 2^n masks; witness is the smallest
/// canonical optimum (zero steps forced to Plus).
inline OracleCover oracle_step_cover(const RulerInstance& a) {
    const std::size_t n = a.size();
    OracleCover best;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Rational r = mask_range(a, mask);
        std::vector<Sign> e(n);
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = a[i].is_zero() || ((mask >> (n - 1 - i)) & 1) ? Sign::Plus : Sign::Minus;
        }
        SignVector w(std::move(e));
        if (!have || r < best.value || (r == best.value && w < best.witness)) {
            best = OracleCover{r, w};
            have = true;
        }
    }
    return best;
}

/// Mass that one walk step of size a sends into [l, r], from the particle
/// description: within a of the left wall move right, within a of the right
/// wall move left, otherwise split evenly.
inline Rational oracle_step_mass(const PiecewiseConstantDensity& q, const Rational& a, const Rational& l,
                                 const Rational& r) {
    const Rational one(1);
    auto mass = [&](const Rational& lo1, const Rational& hi1, const Rational& lo2, const Rational& hi2) {
        const Rational& lo = max(lo1, lo2);
        const Rational& hi = min(hi1, hi2);
        return lo < hi ? q.integral_over(lo, hi) : Rational(0);
    };
    const Rational half(1, 2);
    return mass(-one, a - one, l - a, r - a)          // left wall, pushed right
         + mass(one - a, one, l + a, r + a)           // right wall, pushed left
         + half * mass(a - one, one - a, l - a, r - a)
         + half * mass(a - one, one - a, l + a, r + a);
}

}  // namespace rulerfold::testing
