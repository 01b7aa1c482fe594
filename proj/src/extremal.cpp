#include "rulerfold/extremal.hpp"

#include <string>
#include <unordered_map>
#include <vector>

#include "rulerfold/errors.hpp"

namespace rulerfold {

Rational extremal_delta(int m) {
    if (m < 1) throw InputError("extremal construction needs m >= 1 (got " + std::to_string(m) + ")");
    return Rational(1) / (Rational(3) * pow2(m - 1) - Rational(1));
}

ExtremalInstance build_extremal(int m) {
    const Rational delta = extremal_delta(m);
    const int n = 4 * m - 1;
    std::vector<Rational> a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Rational& ai = a[static_cast<std::size_t>(i - 1)];
        if (i % 2 == 1) {
            ai = Rational(1);
        } else if (i == 2 * m) {
            ai = Rational(1) - pow2(m - 1) * delta;
        } else if (i < 2 * m) {
            ai = Rational(1) - pow2(i / 2 - 1) * delta;
        } else {
            ai = Rational(1) - pow2(2 * m - 1 - i / 2) * delta;
        }
    }
    return ExtremalInstance{m, delta, RulerInstance(std::move(a))};
}

Rational alternating_range(const ExtremalInstance& ext) {
    return evaluate_folding(ext.instance, alternating_signs(ext.instance.size())).range;
}

LowerBoundReport verify_lower_bound(const ExtremalInstance& ext, std::size_t max_n) {
    const std::size_t n = ext.instance.size();
    if (n > max_n) {
        throw SizeLimitError("exhaustive verification is limited to n <= " + std::to_string(max_n) + " (m = " +
                             std::to_string(ext.m) + " gives n = " + std::to_string(n) + ")");
    }

    // All lengths share the denominator of delta, so ranges are tallied as
    // integer multiples of 1/den.
    const mpz_class den = ext.delta.denominator();
    std::vector<long> steps;
    for (const Rational& a : ext.instance.lengths()) steps.push_back(scale_to_integer(a, den).get_si());

    LowerBoundReport report;
    report.bound = Rational(2) - ext.delta;
    report.alternating = alternating_range(ext);
    const long bound = scale_to_integer(report.bound, den).get_si();

    // bit (n-1-i) of mask set <=> e_{i+1} = +1; mask of the alternating folding.
    std::uint64_t alternating_mask = 0;
    for (std::size_t i = 0; i < n; i += 2) alternating_mask |= std::uint64_t{1} << (n - 1 - i);

    std::unordered_map<long, std::uint64_t> tally;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        long s = 0, hi = 0, lo = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s += (mask >> (n - 1 - i)) & 1 ? steps[i] : -steps[i];
            if (s > hi) hi = s;
            if (s < lo) lo = s;
        }
        const long range = hi - lo;
        ++tally[range];
        if (mask != alternating_mask && range < bound) ++report.non_alternating_below_bound;
    }

    report.total = total;
    for (const auto& [range, count] : tally) report.histogram[Rational(mpz_class(range), den)] = count;
    report.min_range = report.histogram.begin()->first;
    report.count_at_min = report.histogram.begin()->second;
    return report;
}

}  // namespace rulerfold
