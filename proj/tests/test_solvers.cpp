#include <doctest.h>

#include "rulerfold/errors.hpp"
#include "rulerfold/extremal.hpp"
#include "rulerfold/solvers.hpp"
#include "support.hpp"

using namespace rulerfold;

namespace {

RulerInstance figure_one() {
    return RulerInstance{Rational(7, 10), Rational(0), Rational(1, 5), Rational(1, 10),
                         Rational(1, 2),  Rational(1, 2), Rational(4, 5)};
}

void check_witness(const RulerInstance& a, const StepCoverResult& r) {
    CHECK(evaluate_folding(a, r.witness).range == r.value);
    CHECK(canonicalize_zero_steps(a, r.witness) == r.witness);
}

}  // namespace

TEST_CASE("brute force reproduces known step-covers") {
    StepCoverResult fig = brute_force_step_cover(figure_one());
    CHECK(fig.value == Rational(9, 10));
    check_witness(figure_one(), fig);

    CHECK(brute_force_step_cover(RulerInstance{Rational(1), Rational(1, 2), Rational(1)}).value == Rational(3, 2));
    CHECK(brute_force_step_cover(RulerInstance{Rational(1), Rational(1)}).value == Rational(1));
    CHECK(brute_force_step_cover(build_extremal(4).instance).value == Rational(45, 23));
}

TEST_CASE("brute force refuses instances above its limit") {
    testing::Rng rng(1);
    RulerInstance big = testing::random_instance(rng, 25);
    CHECK_THROWS_AS(brute_force_step_cover(big), SizeLimitError);
    CHECK_THROWS_AS(brute_force_step_cover(figure_one(), 6), SizeLimitError);
    CHECK_NOTHROW(branch_and_bound_step_cover(big));
}

TEST_CASE("branch and bound examples") {
    StepCoverResult r = branch_and_bound_step_cover(
        RulerInstance{Rational(1), Rational(4, 5), Rational(1), Rational(3, 5), Rational(1), Rational(4, 5), Rational(1)});
    CHECK(r.value == Rational(9, 5));
    StepCoverResult zeros = branch_and_bound_step_cover(RulerInstance{Rational(0), Rational(0), Rational(0)});
    CHECK(zeros.value == Rational(0));
    CHECK(zeros.witness.str() == "+++");
    CHECK(branch_and_bound_step_cover(figure_one()).witness == brute_force_step_cover(figure_one()).witness);
}

TEST_CASE("witness is the lexicographically smallest canonical optimum") {
    // (0, 1): both foldings of the unit step have range 1; the zero step is
    // reported as +, and - < + puts the unit step first as -.
    RulerInstance a{Rational(0), Rational(1)};
    CHECK(brute_force_step_cover(a).witness.str() == "+-");
    CHECK(branch_and_bound_step_cover(a).witness.str() == "+-");

    testing::Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        RulerInstance inst = testing::random_instance(rng, 1, 10, 4);  // small denominators: many ties and zeros
        testing::OracleCover oracle = testing::oracle_step_cover(inst);
        StepCoverResult brute = brute_force_step_cover(inst);
        StepCoverResult bnb = branch_and_bound_step_cover(inst);
        CHECK(brute.value == oracle.value);
        CHECK(brute.witness == oracle.witness);
        CHECK(bnb.value == oracle.value);
        CHECK(bnb.witness == oracle.witness);
    }
}

TEST_CASE("property: branch and bound agrees with brute force") {
    testing::Rng rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        RulerInstance inst = testing::random_instance(rng, 1, 16, 20);
        StepCoverResult brute = brute_force_step_cover(inst);
        StepCoverResult bnb = branch_and_bound_step_cover(inst);
        REQUIRE(bnb.value == brute.value);
        CHECK(bnb.witness == brute.witness);
        check_witness(inst, bnb);
        CHECK(bnb.explored <= brute.explored);
    }
}

TEST_CASE("adversarial corpus: extremal, padded and all-ones instances") {
    std::vector<RulerInstance> corpus;
    for (int m = 1; m <= 4; ++m) {
        RulerInstance e = build_extremal(m).instance;
        corpus.push_back(e);
        corpus.push_back(pad_with_zeros(e, 1));
        corpus.push_back(reverse(pad_with_zeros(e, 1)));
        corpus.push_back(merge_reduce(pad_with_zeros(e, 1)));
    }
    corpus.push_back(RulerInstance(std::vector<Rational>(16, Rational(1))));
    corpus.push_back(RulerInstance(std::vector<Rational>(16, Rational(1, 2))));
    for (const RulerInstance& inst : corpus) {
        StepCoverResult brute = brute_force_step_cover(inst);
        StepCoverResult bnb = branch_and_bound_step_cover(inst);
        CHECK(bnb.value == brute.value);
        CHECK(bnb.witness == brute.witness);
    }
}

TEST_CASE("exact fallback for denominators too large for machine integers") {
    // lcm of these denominators exceeds 2^62, forcing the Rational search path.
    const long primes[] = {1000003, 1000033, 1000037, 1000039, 999983};
    std::vector<Rational> a;
    for (int i = 0; i < 10; ++i) a.push_back(Rational(primes[i % 5] / 2 + i, primes[i % 5]));
    RulerInstance inst(a);
    testing::OracleCover oracle = testing::oracle_step_cover(inst);
    CHECK(brute_force_step_cover(inst).value == oracle.value);
    CHECK(brute_force_step_cover(inst).witness == oracle.witness);
    CHECK(branch_and_bound_step_cover(inst).value == oracle.value);
    CHECK(branch_and_bound_step_cover(inst).witness == oracle.witness);
}

TEST_CASE("node limit is configuration, not semantics") {
    RulerInstance inst = build_extremal(3).instance;
    StepCoverResult unlimited = branch_and_bound_step_cover(inst);
    StepCoverResult generous = branch_and_bound_step_cover(inst, {unlimited.explored});
    CHECK(generous.value == unlimited.value);
    CHECK(generous.witness == unlimited.witness);
    CHECK_THROWS_AS(branch_and_bound_step_cover(inst, {3}), SizeLimitError);
}

TEST_CASE("determinism: repeated runs give identical results") {
    testing::Rng rng(77);
    RulerInstance inst = testing::random_instance(rng, 14);
    StepCoverResult first = branch_and_bound_step_cover(inst);
    for (int i = 0; i < 3; ++i) {
        StepCoverResult again = branch_and_bound_step_cover(inst);
        CHECK(again.value == first.value);
        CHECK(again.witness == first.witness);
        CHECK(again.explored == first.explored);
    }
}

TEST_CASE("property: extensions never shrink the partial range") {
    testing::Rng rng(42);
    std::uniform_int_distribution<std::uint64_t> bits;
    for (int trial = 0; trial < 200; ++trial) {
        RulerInstance inst = testing::random_instance(rng, 2, 20, 10);
        std::uniform_int_distribution<std::size_t> cut(1, inst.size() - 1);
        const std::size_t k = cut(rng);
        const std::uint64_t prefix = bits(rng);
        std::vector<Rational> head(inst.lengths().begin(), inst.lengths().begin() + static_cast<std::ptrdiff_t>(k));
        SignVector prefix_signs = testing::mask_signs(k, prefix);
        const Rational partial = evaluate_folding(RulerInstance(head), prefix_signs).range;
        for (int ext = 0; ext < 10; ++ext) {
            SignVector tail = testing::mask_signs(inst.size() - k, bits(rng));
            std::vector<Sign> full(prefix_signs.signs().begin(), prefix_signs.signs().end());
            full.insert(full.end(), tail.signs().begin(), tail.signs().end());
            CHECK(evaluate_folding(inst, SignVector(full)).range >= partial);
        }
    }
}

TEST_CASE("greedy folding examples") {
    GreedyFolding g = greedy_fold(figure_one());
    CHECK(g.signs.str() == "++---+-");
    // The rule picks - for the zero step (s_1 > 0); it is reported as +.
    CHECK(g.evaluation.prefix_sums ==
          std::vector<Rational>{0, Rational(7, 10), Rational(7, 10), Rational(1, 2), Rational(2, 5),
                                Rational(-1, 10), Rational(2, 5), Rational(-2, 5)});
    CHECK(g.evaluation.range == Rational(11, 10));

    GreedyFolding ones = greedy_fold(RulerInstance{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(ones.signs.str() == "+-+-");
    CHECK(ones.evaluation.range == Rational(1));
}

TEST_CASE("property: greedy keeps |s_i| <= 1 and never beats the optimum") {
    testing::Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        RulerInstance inst = testing::random_instance(rng, 1, 40, 15);
        GreedyFolding g = greedy_fold(inst);
        for (const Rational& s : g.evaluation.prefix_sums) CHECK(abs(s) <= Rational(1));
        CHECK(g.evaluation.range <= Rational(2));
        if (inst.size() <= 12) CHECK(g.evaluation.range >= brute_force_step_cover(inst).value);
    }
}
