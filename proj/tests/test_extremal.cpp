#include <doctest.h>

#include "rulerfold/errors.hpp"
#include "rulerfold/extremal.hpp"
#include "support.hpp"

using namespace rulerfold;

namespace {

std::vector<Rational> over23(std::initializer_list<long> nums) {
    std::vector<Rational> out;
    for (long k : nums) out.push_back(Rational(k, 23));
    return out;
}

}  // namespace

TEST_CASE("build_extremal m = 4 matches the published 15-tuple") {
    ExtremalInstance e = build_extremal(4);
    CHECK(e.delta == Rational(1, 23));
    CHECK(e.instance == RulerInstance(over23({23, 22, 23, 21, 23, 19, 23, 15, 23, 19, 23, 21, 23, 22, 23})));
}

TEST_CASE("build_extremal small m") {
    ExtremalInstance e1 = build_extremal(1);
    CHECK(e1.delta == Rational(1, 2));
    CHECK(e1.instance == RulerInstance{Rational(1), Rational(1, 2), Rational(1)});

    ExtremalInstance e2 = build_extremal(2);
    CHECK(e2.delta == Rational(1, 5));
    CHECK(e2.instance ==
          RulerInstance{Rational(1), Rational(4, 5), Rational(1), Rational(3, 5), Rational(1), Rational(4, 5), Rational(1)});

    CHECK_THROWS_AS(build_extremal(0), InputError);
    CHECK_THROWS_AS(build_extremal(-2), InputError);
}

TEST_CASE("structural invariants for m = 1..10") {
    for (int m = 1; m <= 10; ++m) {
        ExtremalInstance e = build_extremal(m);
        const RulerInstance& a = e.instance;
        REQUIRE(a.size() == static_cast<std::size_t>(4 * m - 1));
        CHECK(e.delta == Rational(1) / Rational(3 * (1L << (m - 1)) - 1));
        for (std::size_t i = 0; i < a.size(); i += 2) CHECK(a[i] == Rational(1));
        CHECK(a[2 * m - 1] == Rational(1) - pow2(m - 1) * e.delta);
        for (const Rational& x : a.lengths()) {
            CHECK(x.sign() > 0);
            CHECK(x <= Rational(1));
        }
        CHECK(reverse(a) == a);
        CHECK(adjacent_sums_exceed_one(a));
        CHECK(merge_reduce(a) == a);
    }
}

TEST_CASE("alternating folding attains 2 - delta") {
    CHECK(alternating_range(build_extremal(4)) == Rational(45, 23));
    CHECK(alternating_range(build_extremal(1)) == Rational(3, 2));
    CHECK(evaluate_folding(build_extremal(1).instance, SignVector::parse("+-+")).prefix_sums ==
          std::vector<Rational>{0, 1, Rational(1, 2), Rational(3, 2)});
    CHECK(alternating_range(build_extremal(2)) == Rational(9, 5));
    for (int m = 1; m <= 30; ++m) {
        ExtremalInstance e = build_extremal(m);
        const Rational telescoped = Rational(1) + (pow2(m) + pow2(m - 1) - Rational(2)) * e.delta;
        CHECK(alternating_range(e) == telescoped);
        CHECK(telescoped == Rational(2) - e.delta);
    }
}

TEST_CASE("verify_lower_bound: f = 2 - delta for m = 1..5") {
    const Rational expected[] = {Rational(3, 2), Rational(9, 5), Rational(21, 11), Rational(45, 23), Rational(93, 47)};
    for (int m = 1; m <= 5; ++m) {
        LowerBoundReport r = verify_lower_bound(build_extremal(m));
        CHECK(r.min_range == expected[m - 1]);
        CHECK(r.bound == expected[m - 1]);
        CHECK(r.alternating == expected[m - 1]);
        CHECK(r.non_alternating_below_bound == 0);
        CHECK(r.holds());
        CHECK(r.total == (std::uint64_t{1} << (4 * m - 1)));
        std::uint64_t sum = 0;
        for (const auto& [range, count] : r.histogram) sum += count;
        CHECK(sum == r.total);
        CHECK(r.count_at_min >= 2);  // the alternating folding and its mirror
    }
}

TEST_CASE("verify_lower_bound refuses instances beyond the limit") {
    CHECK_THROWS_AS(verify_lower_bound(build_extremal(7)), SizeLimitError);
    CHECK_THROWS_AS(verify_lower_bound(build_extremal(2), 6), SizeLimitError);
}

TEST_CASE("spot checks of the non-alternating cases") {
    const ExtremalInstance e = build_extremal(4);
    const Rational delta = e.delta;

    // (e_7, e_8, e_9, e_10) = (+, -, +, +): every completion has range >= 2 + (2^3 - 2^2) delta.
    Rational least;
    bool first = true;
    for (std::uint64_t rest = 0; rest < (1u << 11); ++rest) {
        SignVector tail = testing::mask_signs(11, rest);
        std::vector<Sign> e_full(tail.signs().begin(), tail.signs().begin() + 6);
        for (Sign s : {Sign::Plus, Sign::Minus, Sign::Plus, Sign::Plus}) e_full.push_back(s);
        e_full.insert(e_full.end(), tail.signs().begin() + 6, tail.signs().end());
        Rational r = evaluate_folding(e.instance, SignVector(e_full)).range;
        if (first || r < least) least = r;
        first = false;
    }
    CHECK(least >= Rational(2) + (pow2(3) - pow2(2)) * delta);

    // (e_7 .. e_12) = (+, -, +, -, +, +): range >= 2 + (2^3 + 2^2 - 2^1) delta.
    first = true;
    for (std::uint64_t rest = 0; rest < (1u << 9); ++rest) {
        SignVector tail = testing::mask_signs(9, rest);
        std::vector<Sign> e_full(tail.signs().begin(), tail.signs().begin() + 6);
        for (Sign s : {Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus, Sign::Plus}) e_full.push_back(s);
        e_full.insert(e_full.end(), tail.signs().begin() + 6, tail.signs().end());
        Rational r = evaluate_folding(e.instance, SignVector(e_full)).range;
        if (first || r < least) least = r;
        first = false;
    }
    CHECK(least >= Rational(2) + (pow2(3) + pow2(2) - pow2(1)) * delta);

    CHECK(evaluate_folding(build_extremal(1).instance, SignVector::parse("+++")).range == Rational(5, 2));
}
