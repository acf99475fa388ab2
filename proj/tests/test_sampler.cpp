#include "padicroots/sampler.hpp"

#include <gtest/gtest.h>

#include <map>

namespace padicroots {
namespace {

SamplerConfig config(int n, long p, SamplingMode mode, std::uint64_t trials = 100000)
{
    SamplerConfig c;
    c.n = n;
    c.p = p;
    c.mode = mode;
    c.trials = trials;
    c.seed = 20261016;
    return c;
}

TEST(TrialRng, BelowIsInRangeAndCoversIt)
{
    TrialRng rng(1, 0);
    std::map<std::uint64_t, int> seen;
    for (int i = 0; i < 7000; ++i) {
        const auto x = rng.below(7);
        ASSERT_LT(x, 7U);
        ++seen[x];
    }
    EXPECT_EQ(seen.size(), 7U);
    for (const auto& [value, count] : seen) {
        EXPECT_NEAR(count, 1000, 150) << value;
    }
}

TEST(TrialRng, DigitsAreUniformInTheTopDigit)
{
    // The most significant base-3 digit of a 45-digit draw crosses a chunk boundary.
    TrialRng rng(2, 0);
    const Integer third = power_of(3, 44);
    int counts[3] = {0, 0, 0};
    for (int i = 0; i < 3000; ++i) {
        const Integer x = rng.digits(3, 45);
        ASSERT_LT(x, third * 3);
        ++counts[Integer(x / third).get_si()];
    }
    for (int c : counts) {
        EXPECT_NEAR(c, 1000, 150);
    }
}

TEST(TrialRng, StreamsDependOnSeedAndIndex)
{
    TrialRng a(5, 1), b(5, 1), c(5, 2), d(6, 1);
    const auto x = a.below(1000000007);
    EXPECT_EQ(x, b.below(1000000007));
    EXPECT_NE(x, c.below(1000000007));
    EXPECT_NE(x, d.below(1000000007));
}

TEST(DrawSample, RespectsMode)
{
    TrialRng rng(3, 0);
    for (int i = 0; i < 100; ++i) {
        EXPECT_NO_THROW(draw_sample(rng, 3, 5, SamplingMode::general, 6).validate());
        EXPECT_NO_THROW(draw_sample(rng, 3, 5, SamplingMode::monic, 6).validate());
        EXPECT_NO_THROW(draw_sample(rng, 3, 5, SamplingMode::monic_xn, 6).validate());
    }
}

TEST(DrawSample, ExtensionKeepsLowDigits)
{
    TrialRng rng(4, 0);
    PadicSample s = draw_sample(rng, 2, 3, SamplingMode::monic_xn, 5);
    const auto before = s.coeffs;
    extend_sample(rng, s, 10);
    EXPECT_NO_THROW(s.validate());
    const Integer m = power_of(3, 5);
    for (std::size_t i = 0; i < before.size(); ++i) {
        EXPECT_EQ(Integer(s.coeffs[i] % m), before[i]);
    }
}

TEST(SamplerConfig, Validation)
{
    SamplerConfig c = config(2, 4, SamplingMode::general);
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.p = 3;
    c.k0 = 1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.k0 = 8;
    c.n = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts)
{
    SamplerConfig c = config(3, 2, SamplingMode::general, 4000);
    c.threads = 1;
    const MonteCarloResult a = monte_carlo(c);
    c.threads = 4;
    const MonteCarloResult b = monte_carlo(c);
    EXPECT_EQ(a.histogram.counts, b.histogram.counts);
    EXPECT_EQ(a.histogram.abandoned, b.histogram.abandoned);
    c.seed += 1;
    EXPECT_NE(monte_carlo(c).histogram.counts, a.histogram.counts);
}

TEST(MonteCarlo, QuadraticsSplitHalfTheTime)
{
    const MonteCarloResult r = monte_carlo(config(2, 3, SamplingMode::general), {Rational(1, 2), 0, Rational(1, 2)});
    EXPECT_LT(std::abs(r.z_score(2)), 4.0);
    EXPECT_EQ(r.histogram.counts[1], 0U);
    EXPECT_TRUE(r.abandoned_ok());
}

TEST(MonteCarlo, MonicCubicsSplitCompletely)
{
    const auto expected = expected_distribution(3, 2, SamplingMode::monic);
    EXPECT_EQ(expected[3], Rational(4, 93));
    const MonteCarloResult r = monte_carlo(config(3, 2, SamplingMode::monic), expected);
    EXPECT_LT(std::abs(r.z_score(3)), 4.0);
    EXPECT_LT(r.max_abs_z(), 4.0);
}

TEST(MonteCarlo, MeanRootCountOfQuadraticsNearXSquared)
{
    const auto expected = expected_distribution(2, 3, SamplingMode::monic_xn);
    const MonteCarloResult r = monte_carlo(config(2, 3, SamplingMode::monic_xn), expected);
    EXPECT_EQ(r.expected_mean(), Rational(1, 4));
    EXPECT_LT(std::abs(r.mean() - 0.25) / r.mean_standard_error(), 4.0);
}

TEST(MonteCarlo, LinearPolynomialsAlwaysHaveOneRoot)
{
    const MonteCarloResult r = monte_carlo(config(1, 5, SamplingMode::monic, 1000), {0, 1});
    EXPECT_EQ(r.histogram.counts[1], 1000U);
    EXPECT_EQ(r.z_score(1), 0.0);
}

TEST(MonteCarlo, JsonReport)
{
    const MonteCarloResult r = monte_carlo(config(2, 2, SamplingMode::general, 500), expected_distribution(2, 2, SamplingMode::general));
    const auto j = r.to_json();
    EXPECT_EQ(j.at("trials"), 500);
    EXPECT_EQ(j.at("expected").at("2"), "1/2");
    EXPECT_TRUE(j.contains("z_scores"));
}

TEST(Exhaustive, QuadraticsBracketOneHalf)
{
    const ExhaustiveResult r = exhaustive_small(2, 2, 4, SamplingMode::general);
    EXPECT_EQ(r.total, 4096U);
    EXPECT_TRUE(r.brackets(2, Rational(1, 2)));
    EXPECT_TRUE(r.brackets(0, Rational(1, 2)));
    EXPECT_EQ(r.counts[1], 0U);
}

} // namespace
} // namespace padicroots
