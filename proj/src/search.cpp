#include "rulerfold/search.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "rulerfold/density.hpp"
#include "rulerfold/errors.hpp"
#include "rulerfold/extremal.hpp"

namespace rulerfold {

std::string_view to_string(SearchMethod method) {
    switch (method) {
        case SearchMethod::Grid: return "grid";
        case SearchMethod::Local: return "local";
        case SearchMethod::ExtremalSeeded: return "extremal-seeded";
    }
    return "grid";
}

namespace {

struct Candidate {
    std::vector<Rational> lengths;
    Rational value;
};

bool better(const Rational& value, const std::vector<Rational>& lengths, const Candidate& than) {
    return value > than.value || (value == than.value && lengths < than.lengths);
}

class Searcher {
public:
    Searcher(std::size_t n, std::uint64_t budget, std::uint64_t seed) : n_(n), budget_(budget), rng_(seed) {}

    bool exhausted() const { return spent_ >= budget_; }
    std::uint64_t spent() const { return spent_; }
    std::mt19937_64& rng() { return rng_; }

    Rational score(const std::vector<Rational>& lengths) {
        ++spent_;
        return step_cover(RulerInstance(lengths));
    }

    void offer(const Candidate& c, SearchMethod method) {
        if (!champion_ || better(c.value, c.lengths, *champion_)) {
            champion_ = c;
            method_ = method;
        }
    }

    // Coordinate moves of +-1/den, accepting strict improvement or an equal
    // value at a lexicographically smaller point. Returns the final point.
    Candidate local_search(Candidate current, const mpz_class& den) {
        const Rational unit(mpz_class(1), den);
        const Rational zero(0), one(1);
        bool moved = true;
        while (moved && !exhausted()) {
            moved = false;
            for (std::size_t i = 0; i < n_ && !moved && !exhausted(); ++i) {
                for (int dir : {-1, 1}) {
                    if (exhausted()) break;
                    Rational next = dir < 0 ? current.lengths[i] - unit : current.lengths[i] + unit;
                    if (next < zero || next > one) continue;
                    std::vector<Rational> probe = current.lengths;
                    probe[i] = std::move(next);
                    Rational value = score(probe);
                    if (better(value, probe, current)) {
                        current = Candidate{std::move(probe), std::move(value)};
                        moved = true;
                        break;
                    }
                }
            }
        }
        return current;
    }

    // Scores a starting point, then descends on successively finer grids.
    void explore(std::vector<Rational> start, SearchMethod start_method, mpz_class den, const mpz_class& max_den) {
        if (exhausted()) return;
        Rational value = score(start);
        Candidate c{std::move(start), std::move(value)};
        offer(c, start_method);
        for (; den <= max_den && !exhausted(); den *= 2) {
            Candidate next = local_search(c, den);
            if (next.value != c.value || next.lengths != c.lengths) offer(next, SearchMethod::Local);
            c = std::move(next);
        }
    }

    FitEstimate result(std::uint64_t seed) const {
        FitEstimate out;
        out.n = n_;
        out.best_instance = RulerInstance(champion_->lengths);
        out.best_value = champion_->value;
        out.method = method_;
        out.iterations = spent_;
        out.seed = seed;
        return out;
    }

private:
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t spent_ = 0;
    std::mt19937_64 rng_;
    std::optional<Candidate> champion_;
    SearchMethod method_ = SearchMethod::Grid;
};

mpz_class common_denominator(const std::vector<Rational>& lengths) {
    mpz_class den = 1;
    for (const Rational& a : lengths) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.denominator().get_mpz_t());
    return den;
}

}  // namespace

FitEstimate fit_lower_bound_search(std::size_t n, std::uint64_t budget, std::uint64_t seed,
                                   const SearchOptions& options) {
    if (n == 0) throw InputError("fit search needs n >= 1");
    if (n > options.max_n) {
        throw SizeLimitError("fit search scores exactly and is limited to n <= " + std::to_string(options.max_n) +
                             " (got n = " + std::to_string(n) + ")");
    }
    if (options.max_denominator < 2) throw InputError("fit search needs a maximum grid denominator of at least 2");
    budget = std::max<std::uint64_t>(budget, 1);

    Searcher search(n, budget, seed);
    const mpz_class max_den(static_cast<unsigned long>(options.max_denominator));

    // Structured starting points are scored before any random restart.
    std::vector<std::pair<std::vector<Rational>, SearchMethod>> starts;
    if (n >= 3) {
        const int m = static_cast<int>((n + 1) / 4);
        RulerInstance ext = pad_with_zeros(build_extremal(m).instance, n - (4 * static_cast<std::size_t>(m) - 1));
        starts.emplace_back(std::vector<Rational>(ext.lengths().begin(), ext.lengths().end()),
                            SearchMethod::ExtremalSeeded);
    }
    for (const RulerInstance& s : options.seeds) {
        if (s.size() != n) throw InputError("search seed has length " + std::to_string(s.size()) + ", expected " + std::to_string(n));
        starts.emplace_back(std::vector<Rational>(s.lengths().begin(), s.lengths().end()), SearchMethod::ExtremalSeeded);
    }
    starts.emplace_back(std::vector<Rational>(n, Rational(1)), SearchMethod::Grid);

    for (auto& [lengths, method] : starts) {
        mpz_class den = common_denominator(lengths);
        if (den < 2) den = 2;
        search.explore(std::move(lengths), method, den, max_den);
    }

    std::vector<mpz_class> schedule;
    for (mpz_class d = 2; d <= max_den; d *= 2) schedule.push_back(d);

    for (std::uint64_t restart = 0; !search.exhausted(); ++restart) {
        const mpz_class& den = schedule[restart % schedule.size()];
        std::uniform_int_distribution<unsigned long> pick(0, den.get_ui());
        std::vector<Rational> start(n);
        for (Rational& a : start) a = Rational(mpz_class(pick(search.rng())), den);
        search.explore(std::move(start), SearchMethod::Grid, den, max_den);
    }
    return search.result(seed);
}

MonotonicityReport fit_monotonicity_check(std::vector<FitEstimate> results) {
    std::sort(results.begin(), results.end(), [](const FitEstimate& a, const FitEstimate& b) { return a.n < b.n; });
    for (std::size_t k = 1; k < results.size(); ++k) {
        if (results[k].n != results[k - 1].n + 1) throw InputError("monotonicity check needs estimates for consecutive n");
    }

    MonotonicityReport report;
    for (std::size_t k = 0; k < results.size(); ++k) {
        FitEstimate current = results[k];
        MonotonicityEntry entry;
        entry.n = current.n;
        if (k > 0) {
            const FitEstimate& prev = report.repaired.back();
            RulerInstance padded = pad_with_zeros(prev.best_instance, current.n - prev.n);
            Rational padded_value = step_cover(padded);
            if (padded_value != prev.best_value) report.padding_preserved = false;
            if (current.best_value < prev.best_value) {
                entry.deficient = true;
                current.best_instance = std::move(padded);
                current.best_value = std::move(padded_value);
                current.method = prev.method;
            }
        }
        const int m = static_cast<int>((current.n + 3) / 4);
        entry.value = current.best_value;
        entry.upper_bound = Rational(2) - certificate_epsilon(m);
        entry.within_upper_bound = current.best_value <= entry.upper_bound;
        if (!entry.within_upper_bound) report.upper_bounds_ok = false;
        report.entries.push_back(std::move(entry));
        report.repaired.push_back(std::move(current));
    }
    return report;
}

}  // namespace rulerfold
