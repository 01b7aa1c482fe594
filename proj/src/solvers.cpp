#include "rulerfold/solvers.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rulerfold/errors.hpp"

namespace rulerfold {

namespace {

// Lengths rescaled to integers over their common denominator. Ranges are
// linear in the lengths, so comparisons on the scaled values are exact.
struct ScaledSteps {
    std::vector<std::int64_t> steps;
    mpz_class denominator;
};

std::optional<ScaledSteps> scale_to_integers(const RulerInstance& instance) {
    mpz_class den = 1;
    for (const Rational& a : instance.lengths()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.denominator().get_mpz_t());

    const mpz_class cap = mpz_class(1) << 62;
    ScaledSteps out;
    out.denominator = den;
    mpz_class total = 0;
    for (const Rational& a : instance.lengths()) {
        mpz_class v = a.numerator() * (den / a.denominator());
        total += v;
        if (total >= cap) return std::nullopt;
        out.steps.push_back(v.get_si());
    }
    return out;
}

template <class T>
struct StepTraits;

template <>
struct StepTraits<std::int64_t> {
    static bool is_zero(std::int64_t v) { return v == 0; }
    static std::int64_t zero() { return 0; }
};

template <>
struct StepTraits<Rational> {
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static Rational zero() { return Rational(0); }
};

// Depth-first search over sign vectors in a fixed child order. When
// prune is false every leaf is visited; when true a node is cut as soon
// as its partial range can no longer improve on the incumbent.
template <class T>
class SignSearch {
public:
    SignSearch(std::vector<T> steps, bool prune, std::uint64_t node_limit)
        : steps_(std::move(steps)), prune_(prune), node_limit_(node_limit),
          current_(steps_.size(), Sign::Plus) {}

    void seed_bound(T bound) { bound_ = std::move(bound); }

    // first_sign: the branch tried first at free positions.
    // pinned: index whose sign is fixed to Plus (symmetry breaking), or n.
    void run(Sign first_sign, std::size_t pinned) {
        first_sign_ = first_sign;
        pinned_ = pinned;
        T zero = StepTraits<T>::zero();
        visit(0, zero, zero, zero);
    }

    bool found() const { return have_witness_; }
    const T& best() const { return *bound_; }
    const std::vector<Sign>& witness() const { return witness_; }
    std::uint64_t explored() const { return explored_; }

private:
    void visit(std::size_t i, const T& s, const T& hi, const T& lo) {
        if (node_limit_ != 0 && explored_ >= node_limit_) {
            throw SizeLimitError("branch-and-bound node limit of " + std::to_string(node_limit_) + " reached");
        }
        ++explored_;
        const bool leaf = i == steps_.size();
        T range = hi - lo;
        if (bound_ && (prune_ || leaf)) {
            if (range > *bound_) return;
            if (have_witness_ && !(range < *bound_)) return;
        }
        if (leaf) {
            bound_ = range;
            have_witness_ = true;
            witness_ = current_;
            return;
        }
        if (StepTraits<T>::is_zero(steps_[i]) || i == pinned_) {
            current_[i] = Sign::Plus;
            descend(i, Sign::Plus, s, hi, lo);
            return;
        }
        descend(i, first_sign_, s, hi, lo);
        descend(i, flip(first_sign_), s, hi, lo);
    }

    void descend(std::size_t i, Sign e, const T& s, const T& hi, const T& lo) {
        current_[i] = e;
        T next = e == Sign::Plus ? s + steps_[i] : s - steps_[i];
        if (next > hi) visit(i + 1, next, next, lo);
        else if (next < lo) visit(i + 1, next, hi, next);
        else visit(i + 1, next, hi, lo);
    }

    std::vector<T> steps_;
    bool prune_;
    std::uint64_t node_limit_;
    std::vector<Sign> current_;
    std::vector<Sign> witness_;
    std::optional<T> bound_;
    bool have_witness_ = false;
    Sign first_sign_ = Sign::Minus;
    std::size_t pinned_ = 0;
    std::uint64_t explored_ = 0;
};

Rational unscale(std::int64_t v, const mpz_class& den) { return Rational(mpz_class(static_cast<long>(v)), den); }

std::int64_t scale(const Rational& v, const mpz_class& den) { return scale_to_integer(v, den).get_si(); }

std::size_t first_nonzero(const RulerInstance& instance) {
    for (std::size_t i = 0; i < instance.size(); ++i) {
        if (!instance[i].is_zero()) return i;
    }
    return instance.size();
}

template <class T>
StepCoverResult finish_brute(SignSearch<T>& search, const RulerInstance& instance, Rational value) {
    StepCoverResult out;
    out.value = std::move(value);
    out.witness = canonicalize_zero_steps(instance, SignVector(search.witness()));
    out.explored = search.explored();
    return out;
}

// The search ran with the first nonzero step pinned to Plus and Plus
// explored first, so the first optimum it met is the mirror image of the
// lexicographically smallest optimum.
StepCoverResult finish_bnb(const std::vector<Sign>& witness, std::uint64_t explored,
                           const RulerInstance& instance, Rational value) {
    StepCoverResult out;
    out.value = std::move(value);
    out.witness = canonicalize_zero_steps(instance, SignVector(witness).flipped());
    out.explored = explored;
    return out;
}

}  // namespace

StepCoverResult brute_force_step_cover(const RulerInstance& instance, std::size_t max_n) {
    if (instance.size() > max_n) {
        throw SizeLimitError("brute force is limited to n <= " + std::to_string(max_n) + " (got n = " +
                             std::to_string(instance.size()) + "); use branch_and_bound_step_cover instead");
    }
    const std::size_t none = instance.size();
    if (auto scaled = scale_to_integers(instance)) {
        SignSearch<std::int64_t> search(scaled->steps, /*prune=*/false, 0);
        search.run(Sign::Minus, none);
        return finish_brute(search, instance, unscale(search.best(), scaled->denominator));
    }
    std::vector<Rational> steps(instance.lengths().begin(), instance.lengths().end());
    SignSearch<Rational> search(std::move(steps), /*prune=*/false, 0);
    search.run(Sign::Minus, none);
    Rational value = search.best();
    return finish_brute(search, instance, std::move(value));
}

StepCoverResult branch_and_bound_step_cover(const RulerInstance& instance, const BranchAndBoundOptions& options) {
    const std::size_t pinned = first_nonzero(instance);
    const Rational greedy_range = greedy_fold(instance).evaluation.range;

    if (auto scaled = scale_to_integers(instance)) {
        SignSearch<std::int64_t> search(scaled->steps, /*prune=*/true, options.node_limit);
        search.seed_bound(scale(greedy_range, scaled->denominator));
        search.run(Sign::Plus, pinned);
        return finish_bnb(search.witness(), search.explored(), instance,
                          unscale(search.best(), scaled->denominator));
    }
    std::vector<Rational> steps(instance.lengths().begin(), instance.lengths().end());
    SignSearch<Rational> search(std::move(steps), /*prune=*/true, options.node_limit);
    search.seed_bound(greedy_range);
    search.run(Sign::Plus, pinned);
    return finish_bnb(search.witness(), search.explored(), instance, search.best());
}

Rational step_cover(const RulerInstance& instance) { return branch_and_bound_step_cover(instance).value; }

GreedyFolding greedy_fold(const RulerInstance& instance) {
    std::vector<Sign> signs;
    signs.reserve(instance.size());
    Rational s;
    for (const Rational& a : instance.lengths()) {
        Sign e = s.sign() > 0 ? Sign::Minus : Sign::Plus;
        signs.push_back(e);
        if (e == Sign::Plus) s += a;
        else s -= a;
    }
    GreedyFolding out{canonicalize_zero_steps(instance, SignVector(std::move(signs))), {}};
    out.evaluation = evaluate_folding(instance, out.signs);
    return out;
}

}  // namespace rulerfold
