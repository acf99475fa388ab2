#include "padicroots/series.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

namespace padicroots {
namespace {

using testing::P;
using testing::random_rf;
using testing::ratio;
using testing::rf;

TruncatedSeries series(std::vector<RationalFunction> c, std::size_t order)
{
    return TruncatedSeries(std::move(c), order);
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant = false)
{
    std::vector<RationalFunction> c(order + 1);
    for (auto& x : c) {
        x = random_rf(rng, 2);
    }
    if (unit_constant) {
        c[0] = RationalFunction(1L);
    }
    return series(std::move(c), order);
}

TEST(TruncatedSeries, GeometricSeries)
{
    const std::size_t N = 8;
    const TruncatedSeries one_minus_t = series({1L, -1L}, N);
    const TruncatedSeries geometric = series(std::vector<RationalFunction>(N + 1, RationalFunction(1L)), N);
    EXPECT_EQ(one_minus_t * geometric, TruncatedSeries::one(N));
}

TEST(TruncatedSeries, SquareOfLinearPolynomial)
{
    const RationalFunction c = -rf("p/(p + 1)");
    const TruncatedSeries b1 = series({0L, 1L, c}, 4);
    const TruncatedSeries sq = b1 * b1;
    EXPECT_TRUE(sq[1].is_zero());
    EXPECT_EQ(sq[2], RationalFunction(1L));
    EXPECT_EQ(sq[3], -rf("2p/(p + 1)"));
    EXPECT_EQ(sq[4], c * c);
}

TEST(TruncatedSeries, AddZero)
{
    std::mt19937_64 rng(1);
    const TruncatedSeries a = random_series(rng, 5);
    EXPECT_EQ(a + TruncatedSeries(5), a);
}

TEST(TruncatedSeries, ScaleT)
{
    const TruncatedSeries a1 = series({0L, 1L, -rf("1/(p + 1)")}, 3);
    const TruncatedSeries scaled = scale_t(a1, P());
    EXPECT_EQ(scaled[1], P());
    EXPECT_EQ(scaled[2], -rf("p^2/(p + 1)"));
    EXPECT_EQ(scale_t(a1, RationalFunction(1L)), a1);
    const TruncatedSeries t2 = TruncatedSeries::monomial(RationalFunction(1L), 2, 3);
    EXPECT_EQ(scale_t(t2, RationalFunction::p_power(-1))[2], RationalFunction::p_power(-2));
}

TEST(TruncatedSeries, SymbolicPower)
{
    const TruncatedSeries one_plus_t = series({1L, 1L}, 2);
    const TruncatedSeries r = pow_symbolic(one_plus_t, P());
    EXPECT_EQ(r, series({1L, P(), rf("(p^2 - p)/2")}, 2));
    EXPECT_EQ(pow_symbolic(one_plus_t, RationalFunction(1L)), one_plus_t);
    EXPECT_THROW(pow_symbolic(series({2L, 1L}, 2), P()), std::domain_error);
}

TEST(TruncatedSeries, Phi)
{
    const TruncatedSeries t3 = TruncatedSeries::monomial(RationalFunction(1L), 3, 4);
    EXPECT_EQ(phi(t3)[3], RationalFunction::p_power(-3));
    const TruncatedSeries t4 = TruncatedSeries::monomial(RationalFunction(1L), 4, 4);
    EXPECT_EQ(phi(t4)[4], RationalFunction::p_power(-6));
    const TruncatedSeries one_plus_t = series({1L, 1L}, 4);
    EXPECT_EQ(phi(one_plus_t), one_plus_t);
}

TEST(TruncatedSeries, TruncationAndExactness)
{
    const TruncatedSeries a = series({1L, 2L, 3L}, 4);
    EXPECT_THROW(a.truncated(6), std::invalid_argument);
    EXPECT_THROW(a.evaluate(P()), std::logic_error);
    const TruncatedSeries exact = a.as_exact_polynomial(2);
    EXPECT_EQ(exact.truncated(6).order(), 6U);
    EXPECT_EQ(exact.evaluate(RationalFunction(1L)), RationalFunction(6L));
    EXPECT_THROW(a.as_exact_polynomial(1), std::domain_error);
}

TEST(TruncatedSeries, Formatting)
{
    const TruncatedSeries r1 = series({0L, P() + 1L, -P()}, 2).as_exact_polynomial(2);
    EXPECT_EQ(format_series(r1), "(p + 1) t - p t^2");
    EXPECT_EQ(format_series(series({1L, 1L}, 3)), "1 + t + O(t^4)");
}

// Properties.

TEST(TruncatedSeriesProperties, TruncationCommutesWithProduct)
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        const TruncatedSeries a = random_series(rng, 5);
        const TruncatedSeries b = random_series(rng, 5);
        EXPECT_EQ((a * b).truncated(3), a.truncated(3) * b.truncated(3));
    }
}

TEST(TruncatedSeriesProperties, PowerExponentsAdd)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        const TruncatedSeries a = random_series(rng, 4, true);
        const RationalFunction e1 = random_rf(rng, 1);
        const RationalFunction e2 = random_rf(rng, 1);
        EXPECT_EQ(pow_symbolic(a, e1) * pow_symbolic(a, e2), pow_symbolic(a, e1 + e2));
    }
}

TEST(TruncatedSeriesProperties, IntegerPowerIsRepeatedProduct)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10; ++i) {
        const TruncatedSeries a = random_series(rng, 5, true);
        TruncatedSeries cube = a * a * a;
        EXPECT_EQ(pow_symbolic(a, RationalFunction(3L)), cube);
        EXPECT_EQ(pow_symbolic(a, RationalFunction(0L)), TruncatedSeries::one(5));
    }
}

TEST(TruncatedSeriesProperties, PhiIsLinear)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const TruncatedSeries a = random_series(rng, 6);
        const TruncatedSeries b = random_series(rng, 6);
        const RationalFunction c = random_rf(rng);
        EXPECT_EQ(phi(a + c * b), phi(a) + c * phi(b));
    }
}

TEST(TruncatedSeriesProperties, ScaleInverse)
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 20; ++i) {
        const TruncatedSeries a = random_series(rng, 6);
        EXPECT_EQ(scale_t(scale_t(a, P()), RationalFunction::p_power(-1)), a);
    }
}

TEST(BivariateSeries, PowerOfSum)
{
    // (1 + u t)^(p+1): the u^d coefficient is binom(p+1, d) t^d.
    const std::size_t N = 4;
    std::vector<TruncatedSeries> terms{TruncatedSeries::one(N), TruncatedSeries::monomial(RationalFunction(1L), 1, N),
                                       TruncatedSeries(N), TruncatedSeries(N)};
    const BivariateSeries r = pow_symbolic(BivariateSeries(terms), P() + 1L);
    for (unsigned d = 0; d <= 3; ++d) {
        EXPECT_EQ(r[d], TruncatedSeries::monomial(symbolic_binomial(P() + 1L, d), d, N)) << d;
    }
    EXPECT_EQ(r[0], TruncatedSeries::one(N));
}

TEST(BivariateSeries, EvaluateAtMinusOne)
{
    const std::size_t N = 3;
    std::vector<TruncatedSeries> terms{TruncatedSeries::one(N), series({0L, 2L}, N), series({0L, 0L, 5L}, N)};
    const BivariateSeries b(terms);
    EXPECT_EQ(b.evaluate_u(RationalFunction(-1L)), series({1L, -2L, 5L}, N));
}

TEST(BivariateSeries, ProductMatchesUnivariateAtFixedU)
{
    std::mt19937_64 rng(7);
    const std::size_t N = 3;
    std::vector<TruncatedSeries> ta, tb;
    for (int d = 0; d <= 2; ++d) {
        ta.push_back(random_series(rng, N));
        tb.push_back(random_series(rng, N));
    }
    const BivariateSeries a(ta), b(tb);
    // Only the u^0 coefficient is free of truncation in u.
    EXPECT_EQ((a * b)[0], ta[0] * tb[0]);
    EXPECT_EQ((a * b)[1], ta[0] * tb[1] + ta[1] * tb[0]);
    EXPECT_EQ((a + b)[2], ta[2] + tb[2]);
}

} // namespace
} // namespace padicroots
