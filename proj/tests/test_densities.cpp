#include "padicroots/verify.hpp"

#include <gtest/gtest.h>

#include "golden.hpp"

namespace padicroots {
namespace {

using golden::frac;
using golden::q;

const DensityTable& table6()
{
    static const DensityTable t = compute_density_table(6, 6);
    return t;
}

TEST(Densities, FirstMoments)
{
    const DensityTable& t = table6();
    EXPECT_EQ(t.at(Quantity::alpha, 1, 1), RationalFunction(1L));
    EXPECT_EQ(t.at(Quantity::beta, 1, 1), RationalFunction(1L));
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(t.at(Quantity::alpha, n, 1), q("p/(p + 1)")) << n;
        EXPECT_EQ(t.at(Quantity::beta, n, 1), q("1/(p + 1)")) << n;
    }
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(t.at(Quantity::rho, n, 1), RationalFunction(1L)) << n;
    }
}

TEST(Densities, SecondMoments)
{
    const DensityTable& t = table6();
    EXPECT_EQ(t.at(Quantity::alpha, 2, 2), q("p/(2p + 2)"));
    for (int n = 2; n <= 6; ++n) {
        EXPECT_EQ(frac(2, 1) * t.at(Quantity::alpha, n, 2), golden::twice_alpha2(n)) << n;
        EXPECT_EQ(frac(2, 1) * t.at(Quantity::beta, n, 2), golden::twice_beta2(n)) << n;
        EXPECT_EQ(frac(2, 1) * t.at(Quantity::rho, n, 2), golden::twice_rho2(n)) << n;
    }
}

TEST(Densities, TildeAlphaFirstMoment)
{
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(table6().at(Quantity::alpha_tilde, n, 1), q("p/(p + 1)")) << n;
    }
}

TEST(Densities, MomentsVanishBeyondDegree)
{
    const DensityTable& t = table6();
    EXPECT_TRUE(t.at(Quantity::alpha, 2, 3).is_zero());
    EXPECT_TRUE(t.at(Quantity::rho, 0, 1).is_zero());
    EXPECT_EQ(t.at(Quantity::alpha, 0, 0), RationalFunction(1L));
}

TEST(Densities, RhoStarGolden)
{
    for (int n = 2; n <= 4; ++n) {
        const auto want = golden::rho_star(n);
        for (int r = 0; r <= n; ++r) {
            EXPECT_EQ(table6().at(Quantity::rho_star, n, r), want[static_cast<std::size_t>(r)]) << n << "," << r;
        }
    }
}

TEST(Densities, AlphaStarGoldenAndBetaStarByReciprocal)
{
    for (int n = 2; n <= 4; ++n) {
        const auto want = golden::alpha_star(n);
        for (int r = 0; r <= n; ++r) {
            const auto ur = static_cast<std::size_t>(r);
            EXPECT_EQ(table6().at(Quantity::alpha_star, n, r), want[ur]) << n << "," << r;
            EXPECT_EQ(table6().at(Quantity::beta_star, n, r), reciprocal_substitute(want[ur])) << n << "," << r;
        }
    }
}

TEST(Densities, SplitCompletelyMatchesStar)
{
    // alpha(3,3) is the probability that a monic cubic splits completely.
    const RationalFunction want = q("p^5 - p^4 + p^3") / (frac(6, 1) * q("p + 1") * golden::cyclotomic5());
    EXPECT_EQ(table6().at(Quantity::alpha, 3, 3), want);
    EXPECT_EQ(table6().at(Quantity::alpha, 3, 3), table6().at(Quantity::alpha_star, 3, 3));
    EXPECT_EQ(table6().at(Quantity::beta, 3, 3), RationalFunction::p_power(-3) * table6().at(Quantity::alpha, 3, 3));
}

TEST(Densities, RoutesAgree)
{
    const DensityTable genfun = compute_genfun_route(6, 6);
    const VerificationReport r = verify_route_equivalence(table6(), genfun);
    EXPECT_TRUE(r.all_passed()) << r.to_text();
    EXPECT_EQ(genfun.provenance(Quantity::alpha), Route::generating_function);
    EXPECT_EQ(table6().provenance(Quantity::alpha), Route::recursion);
}

TEST(Densities, RecursiveRouteIsSingularOnlyAtDegreeOne)
{
    // The n = 1 column is fixed by normalisation; the rest comes from the solve.
    const DensityTable t = compute_moment_tables_recursive(3, 3);
    EXPECT_EQ(t.at(Quantity::alpha, 1, 0), RationalFunction(1L));
    EXPECT_EQ(t.at(Quantity::alpha, 1, 1), RationalFunction(1L));
    EXPECT_EQ(t.at(Quantity::beta, 3, 3), RationalFunction::p_power(-3) * t.at(Quantity::alpha, 3, 3));
}

TEST(GeneratingPolynomials, FirstColumn)
{
    const GeneratingPolynomials g = assemble_generating_polynomials(table6(), 1);
    EXPECT_EQ(g.A, golden::A1());
    EXPECT_EQ(g.B, golden::B1());
    EXPECT_EQ(g.R, golden::R1());
    EXPECT_EQ(format_series(g.R), "(p + 1) t - p t^2");
}

TEST(GeneratingPolynomials, SecondColumn)
{
    const GeneratingPolynomials g = assemble_generating_polynomials(table6(), 2);
    const RationalFunction two(2L);
    EXPECT_EQ(two * g.A, golden::twice_A2());
    EXPECT_EQ(two * g.B, golden::twice_B2());
    EXPECT_EQ(two * g.R, golden::twice_R2());
    EXPECT_EQ(two * g.B[4], q("p^2") * golden::eta());
    EXPECT_EQ(two * g.A[3], -q("p^2 + p") * q("2p^3 + p + 1") * golden::eta());
}

TEST(GeneratingPolynomials, NeedsEnoughRows)
{
    EXPECT_THROW(assemble_generating_polynomials(table6(), 4), std::invalid_argument);
    EXPECT_THROW(assemble_generating_polynomials(table6(), 7), std::out_of_range);
}

TEST(GeneratingPolynomials, SeriesSolverMatchesClosedForms)
{
    const GeneratingSeries gs = solve_generating_series(6, 2);
    EXPECT_EQ(gs.A[0], TruncatedSeries::one(6));
    EXPECT_EQ(gs.A[1], golden::A1().truncated(6));
    EXPECT_EQ(gs.R[1], golden::R1().truncated(6));
    EXPECT_EQ(RationalFunction(2L) * gs.B[2], golden::twice_B2().truncated(6));
}

TEST(Conversions, StarRoundTrip)
{
    const DensityTable& t = table6();
    for (Quantity m : {Quantity::alpha, Quantity::beta, Quantity::rho}) {
        const Grid star = moments_to_star(t, m);
        EXPECT_EQ(star_to_moments(star, t.d_max()), t.grid(m)) << quantity_name(m);
    }
}

TEST(Conversions, PartialTableCannotInvert)
{
    const DensityTable partial = compute_density_table(4, 2);
    EXPECT_FALSE(partial.supports_probabilities());
    EXPECT_FALSE(partial.has(Quantity::rho_star));
    EXPECT_EQ(partial.at(Quantity::rho, 4, 2), golden::twice_rho2(4) * frac(1, 2));
}

TEST(Verification, EverythingPassesAtSix)
{
    const VerificationReport r = verify_all(6, 6);
    EXPECT_TRUE(r.all_passed()) << r.to_text();
    EXPECT_GE(r.checks().size(), 25U);
}

TEST(Verification, CorruptedCountsAreReported)
{
    const VerificationReport r = verify_all(4, 4, SplittingCounts(4, {{2, 1}}));
    EXPECT_FALSE(r.all_passed());
    const auto failed = r.failures();
    EXPECT_NE(std::find(failed.begin(), failed.end(), "euler_product"), failed.end());
}

TEST(Verification, NoRootPhiRelationNeedsAStarOnTheRight)
{
    // With B* on the right-hand side instead of A* the relation is false, so
    // the checked form is the one with A*(pt).
    const DensityTable& t = table6();
    const std::size_t N = 6;
    const RationalFunction one(1L);
    auto alternating = [&](Quantity m) {
        TruncatedSeries acc(N);
        for (int d = 0; d <= t.d_max(); ++d) {
            const auto s = series_from_grid(t, m, d);
            acc = d % 2 == 0 ? acc + s : acc - s;
        }
        return acc;
    };
    const TruncatedSeries a = alternating(Quantity::alpha);
    const TruncatedSeries b = alternating(Quantity::beta);
    const TruncatedSeries t1 = TruncatedSeries::monomial(one, 1, N);
    const TruncatedSeries lhs = b - t1 * scale_t(b, RationalFunction::p_power(-1));
    EXPECT_EQ(lhs, phi(a - t1 * scale_t(a, RationalFunction::p())));
    EXPECT_NE(lhs, phi(a - t1 * scale_t(b, RationalFunction::p())));
}

TEST(LargeP, Limits)
{
    const DensityTable& t = table6();
    EXPECT_EQ(large_p_limit(t.at(Quantity::rho_star, 4, 0)).value, Rational(3, 8));
    EXPECT_EQ(large_p_limit(RationalFunction::p_power(3) * t.at(Quantity::beta, 4, 2)).value, Rational(1, 2));
    const VerificationReport r = verify_large_p(t);
    EXPECT_TRUE(r.all_passed()) << r.to_text();
}

} // namespace
} // namespace padicroots
