#include "padicroots/rational_function.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

namespace padicroots {
namespace {

using testing::P;
using testing::random_rf;
using testing::ratio;
using testing::rf;

TEST(RationalFunction, CanonicalArithmetic)
{
    EXPECT_EQ(rf("p/(p + 1)") + rf("1/(p + 1)"), RationalFunction(1L));
    EXPECT_EQ(rf("p - 1") * rf("p + 1"), rf("p^2 - 1"));
    const RationalFunction q = rf("(p^4 - 1)/(p^2 - 1)");
    EXPECT_EQ(q, rf("p^2 + 1"));
    EXPECT_TRUE(q.is_polynomial());
    EXPECT_TRUE(q.denominator().is_one());
}

TEST(RationalFunction, CanonicalFormIsUnique)
{
    // Same value reached by different routes has identical storage.
    const RationalFunction a = rf("(2p + 2)/(4p^2 - 4)");
    const RationalFunction b = rf("1/(2p - 2)");
    EXPECT_EQ(a.numerator(), b.numerator());
    EXPECT_EQ(a.denominator(), b.denominator());
    EXPECT_GT(a.denominator().leading(), 0);
}

TEST(RationalFunction, DivisionByZeroThrows)
{
    EXPECT_THROW(RationalFunction(1L) / RationalFunction(), std::domain_error);
    EXPECT_THROW(RationalFunction().inverse(), std::domain_error);
}

TEST(RationalFunction, ReciprocalSubstitution)
{
    EXPECT_EQ(reciprocal_substitute(rf("p/(p + 1)")), rf("1/(p + 1)"));
    const RationalFunction s = rf("(p^4 + 2p^2 + 1)/(p^4 + p^3 + p^2 + p + 1)");
    EXPECT_EQ(reciprocal_substitute(s), s);
    EXPECT_EQ(reciprocal_substitute(RationalFunction(1L)), RationalFunction(1L));
    EXPECT_EQ(reciprocal_substitute(P() * P()), RationalFunction::p_power(-2));
}

TEST(RationalFunction, Symmetry)
{
    const RationalFunction delta = rf("(p^2 - 2p + 1)/(p^14 - p^9 - p^5 + 1)");
    const RationalFunction rho44
        = delta * ratio(1, 24) * rf("p^12 - p^11 + 4p^10 + 3p^8 + 4p^7 - p^6 + 4p^5 + 3p^4 + 4p^2 - p + 1");
    EXPECT_TRUE(is_symmetric(rho44));
    EXPECT_FALSE(is_symmetric(rf("p/(p + 1)")));
    EXPECT_TRUE(is_symmetric(ratio(1, 2)));
}

TEST(RationalFunction, Evaluate)
{
    EXPECT_EQ(ratio(1, 2).evaluate(3), Rational(1, 2));
    EXPECT_EQ(rf("p/(p + 1)").evaluate(2), Rational(2, 3));
    EXPECT_THROW(rf("1/(p - 1)").evaluate(1), PoleError);
}

TEST(RationalFunction, LargePLimit)
{
    const RationalFunction f = rf("(p^4 + 2p^2 + 1)/(2p^4 + 2p^3 + 2p^2 + 2p + 2)");
    EXPECT_EQ(large_p_limit(f).value, Rational(1, 2));
    EXPECT_EQ(large_p_limit(rf("p/(p + 1)")).value, 1);
    EXPECT_EQ(large_p_limit(rf("p^2/(p + 1)")).kind, LargePLimit::Kind::plus_infinity);
    EXPECT_EQ(large_p_limit(rf("-p^2/(p + 1)")).kind, LargePLimit::Kind::minus_infinity);
    EXPECT_EQ(large_p_limit(rf("1/(p + 1)")).value, 0);
}

TEST(RationalFunction, SymbolicBinomial)
{
    EXPECT_EQ(symbolic_binomial(P(), 2), rf("(p^2 - p)/2"));
    EXPECT_EQ(symbolic_binomial(P(), 0), RationalFunction(1L));
    EXPECT_EQ(symbolic_binomial(P() + 1L, 3), (P() + 1L) * P() * (P() - 1L) * ratio(1, 6));
}

TEST(RationalFunction, BinomialMatchesIntegerBinomial)
{
    for (long n = 0; n <= 12; ++n) {
        for (unsigned k = 0; k <= 6; ++k) {
            Integer expected;
            mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(n), k);
            EXPECT_EQ(symbolic_binomial(P(), k).evaluate(Rational(n)), Rational(expected)) << n << " choose " << k;
        }
    }
}

TEST(RationalFunction, Formatting)
{
    EXPECT_EQ(rf("p/(p + 1)").to_string(), "p/(p + 1)");
    EXPECT_EQ(ratio(1, 2).to_string(), "1/2");
    EXPECT_EQ(rf("-3p^2 + 1").to_string(), "-3p^2 + 1");
    EXPECT_EQ(RationalFunction().to_string(), "0");
}

TEST(RationalFunction, ParseErrors)
{
    EXPECT_THROW(rf("p +"), std::invalid_argument);
    EXPECT_THROW(rf("x"), std::invalid_argument);
    EXPECT_THROW(rf("1/0"), std::invalid_argument);
}

// Properties over seeded random inputs.

TEST(RationalFunctionProperties, StringRoundTrip)
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        const RationalFunction f = random_rf(rng);
        EXPECT_EQ(rf(f.to_string()), f) << f;
        EXPECT_EQ(rational_function_from_json(to_json(f)), f) << f;
    }
}

TEST(RationalFunctionProperties, ReciprocalIsAnInvolution)
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
        const RationalFunction f = random_rf(rng);
        EXPECT_EQ(reciprocal_substitute(reciprocal_substitute(f)), f) << f;
    }
}

TEST(RationalFunctionProperties, SymmetrisedIsSymmetric)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const RationalFunction f = random_rf(rng);
        EXPECT_TRUE(is_symmetric(f + reciprocal_substitute(f))) << f;
        EXPECT_EQ(is_symmetric(f), f == reciprocal_substitute(f));
    }
}

TEST(RationalFunctionProperties, FieldAxioms)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const RationalFunction a = random_rf(rng);
        const RationalFunction b = random_rf(rng);
        const RationalFunction c = random_rf(rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(RationalFunctionProperties, EvaluationIsAHomomorphism)
{
    std::mt19937_64 rng(5);
    const Rational points[] = {Rational(2), Rational(3), Rational(-5, 7), Rational(11, 2)};
    for (int i = 0; i < 200; ++i) {
        const RationalFunction a = random_rf(rng);
        const RationalFunction b = random_rf(rng);
        for (const Rational& q : points) {
            try {
                const Rational va = a.evaluate(q);
                const Rational vb = b.evaluate(q);
                EXPECT_EQ((a + b).evaluate(q), va + vb);
                EXPECT_EQ((a * b).evaluate(q), va * vb);
            } catch (const PoleError&) {
                // A pole of a or b; nothing to compare.
            }
        }
    }
}

TEST(RationalFunctionProperties, ReciprocalMatchesEvaluationAtInverse)
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const RationalFunction f = random_rf(rng);
        for (long q : {2L, 3L, 7L}) {
            try {
                EXPECT_EQ(reciprocal_substitute(f).evaluate(q), f.evaluate(Rational(1, q)));
            } catch (const PoleError&) {
            }
        }
    }
}

} // namespace
} // namespace padicroots
