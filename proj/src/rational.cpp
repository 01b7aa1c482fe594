#include "rulerfold/rational.hpp"

#include <cctype>
#include <ostream>

#include "rulerfold/errors.hpp"

namespace rulerfold {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(numerator, 1);
    q_ /= denominator;
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(parse_integer(num), d);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw InputError("division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

mpz_class scale_to_integer(const Rational& x, const mpz_class& den) {
    mpq_class scaled(x.raw() * den);
    if (scaled.get_den() != 1) throw InputError(x.str() + " is not a multiple of 1/" + den.get_str());
    return scaled.get_num();
}

Rational pow2(int k) {
    mpz_class p = 1;
    if (k >= 0) {
        p <<= k;
        return Rational(p, mpz_class(1));
    }
    p <<= -k;
    return Rational(mpz_class(1), p);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace rulerfold
