#include "rulerfold/instance.hpp"

#include <algorithm>

#include "rulerfold/errors.hpp"

namespace rulerfold {

RulerInstance::RulerInstance(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw InputError("ruler instance must have at least one step");
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        const Rational& a = lengths_[i];
        if (a.sign() < 0 || a > Rational(1)) {
            throw InputError("step length a_" + std::to_string(i + 1) + " = " + a.str() +
                             " is outside [0, 1]");
        }
    }
}

SignVector SignVector::parse(std::string_view text) {
    std::vector<Sign> out;
    for (char c : text) {
        switch (c) {
            case '+': out.push_back(Sign::Plus); break;
            case '-': out.push_back(Sign::Minus); break;
            case ',': case ' ': case '(': case ')': case '\t': break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "' in sign string");
        }
    }
    return SignVector(std::move(out));
}

SignVector SignVector::flipped() const {
    std::vector<Sign> out(signs_.size());
    std::transform(signs_.begin(), signs_.end(), out.begin(), flip);
    return SignVector(std::move(out));
}

std::string SignVector::str() const {
    std::string s;
    s.reserve(signs_.size());
    for (Sign e : signs_) s.push_back(e == Sign::Plus ? '+' : '-');
    return s;
}

SignVector alternating_signs(std::size_t n) {
    std::vector<Sign> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i % 2 == 0 ? Sign::Plus : Sign::Minus;
    return SignVector(std::move(out));
}

SignVector canonicalize_zero_steps(const RulerInstance& instance, const SignVector& signs) {
    if (signs.size() != instance.size()) throw InputError("sign vector length does not match instance");
    std::vector<Sign> out(signs.signs().begin(), signs.signs().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (instance[i].is_zero()) out[i] = Sign::Plus;
    }
    return SignVector(std::move(out));
}

FoldingEvaluation evaluate_folding(const RulerInstance& instance, const SignVector& signs) {
    if (signs.size() != instance.size()) {
        throw InputError("sign vector has " + std::to_string(signs.size()) + " entries but instance has " +
                         std::to_string(instance.size()) + " steps");
    }
    FoldingEvaluation ev;
    ev.prefix_sums.reserve(instance.size() + 1);
    ev.prefix_sums.emplace_back(0);
    Rational s;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        if (signs[i] == Sign::Plus) s += instance[i];
        else s -= instance[i];
        ev.prefix_sums.push_back(s);
    }
    auto [lo, hi] = std::minmax_element(ev.prefix_sums.begin(), ev.prefix_sums.end());
    ev.min_s = *lo;
    ev.max_s = *hi;
    ev.range = ev.max_s - ev.min_s;
    return ev;
}

RulerInstance pad_with_zeros(const RulerInstance& instance, std::size_t k) {
    std::vector<Rational> out(instance.lengths().begin(), instance.lengths().end());
    out.resize(out.size() + k);
    return RulerInstance(std::move(out));
}

std::optional<RulerInstance> merge_once(const RulerInstance& instance) {
    const Rational one(1);
    std::span<const Rational> a = instance.lengths();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i] + a[i + 1] > one) continue;
        std::vector<Rational> out(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(a[i] + a[i + 1]);
        out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i) + 2, a.end());
        out.push_back(one);
        return RulerInstance(std::move(out));
    }
    return std::nullopt;
}

RulerInstance merge_reduce(const RulerInstance& instance) {
    // Each merge raises the total length by 1 and the total is bounded by n,
    // so at most n merges happen.
    RulerInstance current = instance;
    while (auto next = merge_once(current)) current = std::move(*next);
    return current;
}

RulerInstance reverse(const RulerInstance& instance) {
    std::vector<Rational> out(instance.lengths().rbegin(), instance.lengths().rend());
    return RulerInstance(std::move(out));
}

bool adjacent_sums_exceed_one(const RulerInstance& instance) {
    const Rational one(1);
    for (std::size_t i = 0; i + 1 < instance.size(); ++i) {
        if (instance[i] + instance[i + 1] <= one) return false;
    }
    return true;
}

}  // namespace rulerfold
