#include "rulerfold/montecarlo.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rulerfold/errors.hpp"

namespace rulerfold {

namespace {

void check_edges(std::span<const Rational> edges) {
    if (edges.size() < 2 || edges.front() != Rational(-1) || edges.back() != Rational(1)) {
        throw InputError("histogram edges must run from -1 to 1");
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] < edges[i + 1])) throw InputError("histogram edges must be strictly increasing");
    }
}

}  // namespace

MonteCarloHistogram monte_carlo_walk(std::span<const Rational> steps, std::uint64_t samples, std::uint64_t seed,
                                     std::span<const Rational> edges) {
    if (samples == 0) throw InputError("monte carlo walk needs at least one sample");
    check_edges(edges);
    for (const Rational& a : steps) {
        if (a.sign() < 0 || a > Rational(1)) throw InputError("walk step " + a.str() + " must lie in [0, 1]");
    }

    mpz_class den = 1;
    for (const Rational& a : steps) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.denominator().get_mpz_t());
    for (const Rational& e : edges) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.denominator().get_mpz_t());

    // Unit length is `scale` lattice units with scale = 2 * den * k, so every
    // step and edge is an even number of units. Particles start on odd units.
    const mpz_class limit = mpz_class(1) << 50;
    if (2 * den > limit) throw InputError("denominators too large for the monte carlo lattice");
    mpz_class k = 1;
    while (4 * den * k <= limit) k *= 2;
    const std::int64_t scale = mpz_class(2 * den * k).get_si();

    std::vector<std::int64_t> step_units;
    for (const Rational& a : steps) step_units.push_back(scale_to_integer(a, mpz_class(scale)).get_si());
    std::vector<std::int64_t> edge_units;
    for (const Rational& e : edges) edge_units.push_back(scale_to_integer(e, mpz_class(scale)).get_si());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> start(0, scale - 1);

    MonteCarloHistogram hist;
    hist.edges.assign(edges.begin(), edges.end());
    hist.counts.assign(edges.size() - 1, 0);
    hist.samples = samples;
    for (std::uint64_t n = 0; n < samples; ++n) {
        std::int64_t x = -scale + 2 * start(rng) + 1;
        for (std::int64_t a : step_units) {
            if (x < a - scale) x += a;
            else if (x > scale - a) x -= a;
            else x += (rng() & 1) ? a : -a;
        }
        auto it = std::upper_bound(edge_units.begin(), edge_units.end(), x);
        ++hist.counts[static_cast<std::size_t>(it - edge_units.begin()) - 1];
    }
    return hist;
}

MonteCarloHistogram monte_carlo_walk(const RulerInstance& instance, std::uint64_t samples, std::uint64_t seed) {
    const std::size_t n = instance.size();
    if (n % 4 != 0) throw InputError("monte carlo walk needs n = 4m steps (got n = " + std::to_string(n) + ")");
    std::span<const Rational> forward = instance.lengths().subspan(n / 2);
    PiecewiseConstantDensity q = uniform_density();
    for (const Rational& a : forward) q = phi(q, a);
    return monte_carlo_walk(forward, samples, seed, q.breakpoints());
}

std::vector<Rational> bin_masses(const PiecewiseConstantDensity& q, std::span<const Rational> edges) {
    check_edges(edges);
    std::vector<Rational> out;
    out.reserve(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) out.push_back(q.integral_over(edges[i], edges[i + 1]));
    return out;
}

}  // namespace rulerfold
