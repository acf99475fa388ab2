#include "padicroots/padic.hpp"
#include "padicroots/sampler.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace padicroots {

void PrintTo(SamplingMode m, std::ostream* os) { *os << mode_name(m); }

namespace {

std::vector<Integer> ints(std::initializer_list<long> c)
{
    std::vector<Integer> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return v;
}

PadicSample sample(long p, int K, std::initializer_list<long> c, SamplingMode mode = SamplingMode::general)
{
    return PadicSample::from_integers(p, K, ints(c), mode);
}

std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    std::vector<Integer> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TEST(ZpRoots, Examples)
{
    EXPECT_EQ(count_zp_roots(sample(3, 5, {-1, 0, 1})).count, 2);
    EXPECT_EQ(count_zp_roots(sample(5, 5, {-2, 0, 1})).count, 0);
    EXPECT_EQ(count_zp_roots(sample(3, 5, {-3, 0, 1})).count, 0);
}

TEST(ZpRoots, SquareOfLinearIsUndeterminedAtFinitePrecision)
{
    // (x - 1)^2 mod 5^6 has lifts with two roots and lifts with none.
    const RootCountResult r = count_zp_roots(sample(5, 6, {1, -2, 1}));
    EXPECT_FALSE(r.determined());
    const Integer eps = power_of(5, 6);
    EXPECT_EQ(count_integer_polynomial_roots({Integer(1) - eps, -2, 1}, 5, false).count, 2);
    EXPECT_EQ(count_integer_polynomial_roots({Integer(1) + 2 * eps, -2, 1}, 5, false).count, 0);
    // The exact polynomial has one distinct root.
    EXPECT_EQ(count_integer_polynomial_roots(ints({1, -2, 1}), 5, false).count, 1);
}

TEST(ZpRoots, ZeroPolynomialIsUndetermined)
{
    EXPECT_FALSE(count_zp_roots(sample(3, 4, {0, 0, 0})).determined());
    EXPECT_FALSE(count_zp_roots(sample(3, 4, {81, 162})).determined());
    EXPECT_THROW(count_integer_polynomial_roots(ints({0}), 3, false), std::invalid_argument);
}

TEST(QpRoots, Examples)
{
    EXPECT_EQ(count_qp_roots(sample(3, 5, {-1, 3})).count, 1);
    EXPECT_EQ(count_zp_roots(sample(3, 5, {-1, 3})).count, 0);
    EXPECT_EQ(count_qp_roots(sample(3, 5, {-1, 0, 1})).count, 2);
}

TEST(QpRoots, MonicAgreesWithZp)
{
    for (int i = 0; i < 500; ++i) {
        TrialRng trial(99, static_cast<std::uint64_t>(i));
        const PadicSample s = draw_sample(trial, 3, 3, SamplingMode::monic, 12);
        EXPECT_EQ(count_qp_roots(s).count, count_zp_roots(s).count);
    }
}

TEST(PadicSample, Validation)
{
    EXPECT_THROW(sample(4, 3, {1, 1}), std::invalid_argument);
    EXPECT_THROW(sample(3, 0, {1, 1}), std::invalid_argument);
    EXPECT_THROW(sample(3, 3, {1, 2}, SamplingMode::monic), std::invalid_argument);
    EXPECT_THROW(sample(3, 3, {1, 1}, SamplingMode::monic_xn), std::invalid_argument);
    EXPECT_NO_THROW(sample(3, 3, {3, 1}, SamplingMode::monic_xn));
    EXPECT_EQ(sample(3, 2, {-1, 1}).coeffs[0], 8);
}

TEST(IntegerPolynomials, ProductsOfKnownFactors)
{
    // Distinct integer roots, a quadratic with no 5-adic root, and 1/5.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> root(-40, 40);
    for (int i = 0; i < 60; ++i) {
        std::set<long> roots;
        std::vector<Integer> f = ints({1});
        const int k = static_cast<int>(rng() % 4);
        for (int j = 0; j < k; ++j) {
            const long r = root(rng);
            roots.insert(r);
            f = multiply(f, ints({-r, 1}));
        }
        f = multiply(f, ints({-2, 0, 1}));
        const bool with_outer = rng() % 2 == 0;
        if (with_outer) {
            f = multiply(f, ints({-1, 5}));
        }
        const auto distinct = static_cast<int>(roots.size());
        EXPECT_EQ(count_integer_polynomial_roots(f, 5, false).count, distinct);
        EXPECT_EQ(count_integer_polynomial_roots(f, 5, true).count, distinct + (with_outer ? 1 : 0));
    }
}

// Properties of the descent on random samples.

class DescentProperties : public ::testing::TestWithParam<std::tuple<long, SamplingMode>> {};

TEST_P(DescentProperties, DeterminedCountsSurviveExtension)
{
    const auto [p, mode] = GetParam();
    int determined = 0;
    for (std::uint64_t i = 0; determined < 1000 && i < 5000; ++i) {
        TrialRng rng(2024, i);
        PadicSample s = draw_sample(rng, 3, p, mode, 4);
        const RootCountResult base = count_roots(s);
        if (!base.determined()) {
            continue;
        }
        ++determined;
        extend_sample(rng, s, 12);
        EXPECT_EQ(count_roots(s).count, base.count) << "trial " << i;
    }
    EXPECT_EQ(determined, 1000);
}

TEST_P(DescentProperties, CountIsBoundedByDegree)
{
    const auto [p, mode] = GetParam();
    for (std::uint64_t i = 0; i < 500; ++i) {
        TrialRng rng(7, i);
        const PadicSample s = draw_sample(rng, 4, p, mode, 10);
        const RootCountResult r = count_roots(s);
        if (r.determined()) {
            EXPECT_GE(*r.count, 0);
            EXPECT_LE(*r.count, 4);
            EXPECT_LE(r.precision_consumed, s.K);
        }
    }
}

// Scaling and reversal leave the monic families, so these use general samples.

TEST(GeneralDescent, InvariantUnderUnitScaling)
{
    for (long p : {2L, 3L, 5L}) {
        for (std::uint64_t i = 0; i < 300; ++i) {
            TrialRng rng(8, i);
            const PadicSample s = draw_sample(rng, 3, p, SamplingMode::general, 10);
            std::vector<Integer> scaled(s.coeffs);
            for (auto& c : scaled) {
                c *= p + 1;
            }
            const auto a = count_roots(s);
            const auto b = count_roots(PadicSample::from_integers(p, s.K, scaled));
            if (a.determined() && b.determined()) {
                EXPECT_EQ(a.count, b.count) << "p=" << p << " trial " << i;
            }
        }
    }
}

TEST_P(DescentProperties, InvariantUnderIntegerTranslation)
{
    const auto [p, mode] = GetParam();
    // f(x + 1) = sum_k c_k sum_j binom(k, j) x^j.
    for (std::uint64_t i = 0; i < 300; ++i) {
        TrialRng rng(10, i);
        const PadicSample s = draw_sample(rng, 3, p, mode, 10);
        const std::size_t n = s.coeffs.size();
        std::vector<Integer> g(n, 0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j <= k; ++j) {
                Integer binom;
                mpz_bin_uiui(binom.get_mpz_t(), k, j);
                g[j] += s.coeffs[k] * binom;
            }
        }
        const auto translated = PadicSample::from_integers(p, s.K, g, SamplingMode::general);
        const auto a = mode == SamplingMode::general ? count_qp_roots(s) : count_zp_roots(s);
        const auto b = mode == SamplingMode::general ? count_qp_roots(translated) : count_zp_roots(translated);
        if (a.determined() && b.determined()) {
            EXPECT_EQ(a.count, b.count) << "trial " << i;
        }
    }
}

TEST(GeneralDescent, ReversalPreservesRationalRoots)
{
    for (long p : {2L, 3L, 5L}) {
        for (std::uint64_t i = 0; i < 300; ++i) {
            TrialRng rng(12, i);
            const PadicSample s = draw_sample(rng, 3, p, SamplingMode::general, 10);
            if (s.coeffs.front() == 0 || s.coeffs.back() == 0) {
                continue;
            }
            const PadicSample r
                = PadicSample::from_integers(p, s.K, std::vector<Integer>(s.coeffs.rbegin(), s.coeffs.rend()));
            const auto a = count_qp_roots(s);
            const auto b = count_qp_roots(r);
            if (a.determined() && b.determined()) {
                EXPECT_EQ(a.count, b.count) << "p=" << p << " trial " << i;
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(AllModes, DescentProperties,
                         ::testing::Combine(::testing::Values(2L, 3L, 5L),
                                            ::testing::Values(SamplingMode::general, SamplingMode::monic,
                                                              SamplingMode::monic_xn)),
                         [](const auto& info) {
                             return "p" + std::to_string(std::get<0>(info.param)) + "_"
                                    + std::string(mode_name(std::get<1>(info.param)));
                         });

TEST(Exhaustive, LinearMonicAlwaysHasOneRoot)
{
    const ExhaustiveResult r = exhaustive_small(1, 3, 3, SamplingMode::monic);
    EXPECT_EQ(r.total, 27U);
    EXPECT_EQ(r.counts.at(1), 27U);
    EXPECT_EQ(r.undetermined, 0U);
}

TEST(Exhaustive, UndeterminedMassShrinksWithPrecision)
{
    Rational previous(2);
    for (int K = 1; K <= 4; ++K) {
        const ExhaustiveResult r = exhaustive_small(2, 2, K, SamplingMode::general);
        EXPECT_LE(r.undetermined_fraction(), previous) << "K=" << K;
        previous = r.undetermined_fraction();
    }
}

TEST(Exhaustive, BudgetIsEnforced)
{
    EXPECT_THROW(exhaustive_small(4, 5, 6, SamplingMode::general, 1000), std::length_error);
}

} // namespace
} // namespace padicroots
