#pragma once

// Ruler instances, sign vectors, and folding evaluation.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rulerfold/rational.hpp"

namespace rulerfold {

/// Step lengths a_1..a_n with n >= 1 and every a_i in [0, 1].
class RulerInstance {
public:
    /// Throws InputError if empty or if any length lies outside [0, 1].
    explicit RulerInstance(std::vector<Rational> lengths);
    RulerInstance(std::initializer_list<Rational> lengths)
        : RulerInstance(std::vector<Rational>(lengths)) {}

    std::size_t size() const { return lengths_.size(); }
    std::span<const Rational> lengths() const { return lengths_; }
    const Rational& operator[](std::size_t i) const { return lengths_[i]; }

    friend bool operator==(const RulerInstance&, const RulerInstance&) = default;
    /// Lexicographic on lengths; used as a deterministic tie-break.
    friend auto operator<=>(const RulerInstance& a, const RulerInstance& b) {
        return a.lengths_ <=> b.lengths_;
    }

private:
    std::vector<Rational> lengths_;
};

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// A folding e_1..e_n. Ordered lexicographically with Minus < Plus.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}
    SignVector(std::initializer_list<Sign> signs) : signs_(signs) {}

    /// Accepts "+-+", "(-,-,+)", "- - +" and similar; anything but
    /// '+', '-', ',', spaces and parentheses is a ParseError.
    static SignVector parse(std::string_view text);

    std::size_t size() const { return signs_.size(); }
    Sign operator[](std::size_t i) const { return signs_[i]; }
    std::span<const Sign> signs() const { return signs_; }

    SignVector flipped() const;
    /// Compact "+-+" form.
    std::string str() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;
    friend auto operator<=>(const SignVector& a, const SignVector& b) {
        return a.signs_ <=> b.signs_;
    }

private:
    std::vector<Sign> signs_;
};

/// e_i = (-1)^{i+1}, i.e. "+-+-...".
SignVector alternating_signs(std::size_t n);

/// Forces the sign of every zero-length step to Plus.
SignVector canonicalize_zero_steps(const RulerInstance& instance, const SignVector& signs);

struct FoldingEvaluation {
    std::vector<Rational> prefix_sums;  // s_0 .. s_n, s_0 = 0
    Rational max_s;
    Rational min_s;
    Rational range;
};

/// Prefix sums and range g(e, a). Throws InputError on length mismatch.
FoldingEvaluation evaluate_folding(const RulerInstance& instance, const SignVector& signs);

/// Appends k zero-length steps.
RulerInstance pad_with_zeros(const RulerInstance& instance, std::size_t k);

/// One merge: the leftmost adjacent pair with a_i + a_{i+1} <= 1 becomes
/// its sum and a unit step is appended. nullopt when no pair qualifies.
std::optional<RulerInstance> merge_once(const RulerInstance& instance);

/// Repeatedly replaces the leftmost adjacent pair with a_i + a_{i+1} <= 1
/// by its sum and appends a unit step, until every adjacent pair sums to
/// more than 1. The length n is preserved.
RulerInstance merge_reduce(const RulerInstance& instance);

RulerInstance reverse(const RulerInstance& instance);

/// True when every adjacent pair sums to more than 1 (vacuous for n = 1).
bool adjacent_sums_exceed_one(const RulerInstance& instance);

}  // namespace rulerfold
