/*
   Copyright 2026 The padicroots Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PADICROOTS_VERIFY_HPP
#define PADICROOTS_VERIFY_HPP

#include "padicroots/densities.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace padicroots {

struct CheckResult {
    std::string name;
    std::string description;
    bool passed = true;
    /// Number of comparisons, or the first failing one.
    std::string detail;
};

class VerificationReport {
public:
    void add(CheckResult c) { checks_.push_back(std::move(c)); }

    void append(const VerificationReport& other)
    {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    const std::vector<CheckResult>& checks() const { return checks_; }

    bool all_passed() const
    {
        return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
    }

    std::vector<std::string> failures() const
    {
        std::vector<std::string> names;
        for (const auto& c : checks_) {
            if (!c.passed) {
                names.push_back(c.name);
            }
        }
        return names;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json items = nlohmann::json::array();
        for (const auto& c : checks_) {
            items.push_back(
                {{"name", c.name}, {"description", c.description}, {"passed", c.passed}, {"detail", c.detail}});
        }
        return {{"all_passed", all_passed()}, {"checks", std::move(items)}};
    }

    std::string to_text() const
    {
        std::string out;
        for (const auto& c : checks_) {
            out += (c.passed ? "PASS " : "FAIL ") + c.name + "  " + c.detail + "\n";
        }
        return out;
    }

private:
    std::vector<CheckResult> checks_;
};

namespace detail {

// Collects comparisons for one named check; keeps the first failure.
class Check {
public:
    Check(std::string name, std::string description)
        : name_(std::move(name)), description_(std::move(description))
    {
    }

    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++count_;
        if (!ok && passed_) {
            passed_ = false;
            detail_ = what();
        }
    }

    void fail(std::string what)
    {
        if (passed_) {
            passed_ = false;
            detail_ = std::move(what);
        }
    }

    CheckResult result() const
    {
        return {name_, description_, passed_, passed_ ? std::to_string(count_) + " comparisons" : detail_};
    }

private:
    std::string name_;
    std::string description_;
    bool passed_ = true;
    std::size_t count_ = 0;
    std::string detail_;
};

inline std::string at_label(Quantity q, int n, int k)
{
    return std::string(quantity_name(q)) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

inline std::string mismatch(const std::string& what, const RationalFunction& lhs, const RationalFunction& rhs)
{
    return what + ": " + lhs.to_string() + " != " + rhs.to_string();
}

inline TruncatedSeries times_t(const TruncatedSeries& s)
{
    return TruncatedSeries::monomial(RationalFunction(1L), 1, s.order()) * s;
}

// Index of the first differing coefficient, for failure messages.
inline std::string series_mismatch(const std::string& what, const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t top = std::min(a.order(), b.order());
    for (std::size_t n = 0; n <= top; ++n) {
        if (!(a[n] == b[n])) {
            return mismatch(what + " at t^" + std::to_string(n), a[n], b[n]);
        }
    }
    return what;
}

inline BivariateSeries bivariate_from_grid(const DensityTable& table, Quantity q, bool scale_by_p = false)
{
    std::vector<TruncatedSeries> terms;
    for (int d = 0; d <= table.d_max(); ++d) {
        TruncatedSeries s = series_from_grid(table, q, d);
        terms.push_back(scale_by_p ? scale_t(s, RationalFunction::p()) : std::move(s));
    }
    return BivariateSeries(std::move(terms));
}

inline Rational inverse_factorial(int d)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(d));
    return Rational(Integer(1), f);
}

// Limit of the derangement-type sum (1/r!) sum_{d<=n-r} (-1)^d / d!.
inline Rational star_limit(int n, int r)
{
    Rational acc;
    for (int d = 0; d <= n - r; ++d) {
        acc += (d % 2 == 0 ? 1 : -1) * inverse_factorial(d);
    }
    acc *= inverse_factorial(r);
    acc.canonicalize();
    return acc;
}

inline std::string limit_text(const LargePLimit& l)
{
    if (l.is_finite()) {
        return l.value.get_str();
    }
    return l.kind == LargePLimit::Kind::plus_infinity ? "+inf" : "-inf";
}

} // namespace detail

/// Counting identities for N_d and N_sigma up to degree n_max.
inline VerificationReport verify_splitting_counts(int n_max, const SplittingCounts& counts)
{
    VerificationReport report;
    // Degree 0 has nothing to expand.
    const EulerProductCheck euler = n_max >= 1 ? verify_euler_product(n_max, counts) : EulerProductCheck{true, true};
    report.add({"euler_product", "sum_n p^n t^n equals prod_d (1 - t^d)^(-N_d)", euler.euler_product,
                euler.euler_product ? "holds to t^" + std::to_string(n_max) : "coefficient mismatch"});
    report.add({"euler_product_linear_factors",
                "splitting-type generating function with marked linear factors, at fixed specialisations",
                euler.linear_specialisation,
                euler.linear_specialisation ? "holds to t^" + std::to_string(n_max) : "coefficient mismatch"});

    detail::Check partition("splitting_types_partition", "sum over splitting types of N_sigma equals p^n");
    for (int n = 0; n <= n_max; ++n) {
        RationalFunction total;
        for (const auto& c : counts.counts(n)) {
            total += c;
        }
        const RationalFunction expected = RationalFunction::p_power(n);
        partition.expect(total == expected,
                         [&] { return detail::mismatch("n = " + std::to_string(n), total, expected); });
    }
    report.add(partition.result());
    return report;
}

/// Symmetries, generating-function identities, polynomiality and stabilisation.
inline VerificationReport verify_core_identities(const DensityTable& table)
{
    VerificationReport report;
    const RationalFunction p = RationalFunction::p();
    const RationalFunction one(1L);
    const int N = table.n_max();
    const int D = table.d_max();

    {
        detail::Check c("rho_reciprocal_symmetry", "rho(n,d; p) = rho(n,d; 1/p)");
        detail::Check ab("alpha_beta_reciprocity", "alpha(n,d; 1/p) = beta(n,d; p)");
        for (int n = 0; n <= N; ++n) {
            for (int d = 0; d <= std::min(n, D); ++d) {
                const auto rho = table.at(Quantity::rho, n, d);
                c.expect(is_symmetric(rho), [&] { return detail::at_label(Quantity::rho, n, d) + " = " + rho.to_string(); });
                const auto a = reciprocal_substitute(table.at(Quantity::alpha, n, d));
                const auto b = table.at(Quantity::beta, n, d);
                ab.expect(a == b, [&] { return detail::mismatch(detail::at_label(Quantity::alpha, n, d), a, b); });
            }
        }
        report.add(c.result());
        report.add(ab.result());
    }

    const BivariateSeries a_scaled = detail::bivariate_from_grid(table, Quantity::alpha, true);
    const BivariateSeries b_series = detail::bivariate_from_grid(table, Quantity::beta);
    const BivariateSeries r_series = detail::bivariate_from_grid(table, Quantity::rho);
    const BivariateSeries b_power = pow_symbolic(b_series, p);
    {
        detail::Check c("alpha_from_beta_power", "sum_d A_d(pt) u^d = (sum_d B_d(t) u^d)^p");
        for (int d = 0; d <= D; ++d) {
            const auto ud = static_cast<std::size_t>(d);
            c.expect(a_scaled[ud] == b_power[ud],
                     [&] { return detail::series_mismatch("u^" + std::to_string(d), a_scaled[ud], b_power[ud]); });
        }
        report.add(c.result());
    }
    {
        detail::Check c("rho_from_alpha_beta", "sum_d R_d u^d = (sum_d A_d(pt) u^d)(sum_d B_d u^d) = (sum_d B_d u^d)^(p+1)");
        const BivariateSeries product = a_scaled * b_series;
        const BivariateSeries power = pow_symbolic(b_series, p + one);
        for (int d = 0; d <= D; ++d) {
            const auto ud = static_cast<std::size_t>(d);
            c.expect(r_series[ud] == product[ud],
                     [&] { return detail::series_mismatch("product, u^" + std::to_string(d), r_series[ud], product[ud]); });
            c.expect(r_series[ud] == power[ud],
                     [&] { return detail::series_mismatch("power, u^" + std::to_string(d), r_series[ud], power[ud]); });
        }
        report.add(c.result());
    }
    {
        detail::Check c("beta_from_alpha_phi", "B_d(t) - t B_d(t/p) = Phi(A_d(t) - t A_d(pt))");
        const RationalFunction inv_p = RationalFunction::p_power(-1);
        for (int d = 0; d <= D; ++d) {
            const TruncatedSeries A = series_from_grid(table, Quantity::alpha, d);
            const TruncatedSeries B = series_from_grid(table, Quantity::beta, d);
            const TruncatedSeries lhs = B - detail::times_t(scale_t(B, inv_p));
            const TruncatedSeries rhs = phi(A - detail::times_t(scale_t(A, p)));
            c.expect(lhs == rhs, [&] { return detail::series_mismatch("d = " + std::to_string(d), lhs, rhs); });
        }
        report.add(c.result());
    }

    // Columns whose generating functions close within the computed range.
    std::vector<std::pair<int, GeneratingPolynomials>> closed;
    {
        detail::Check c("generating_polynomial_degree", "A_d, B_d, R_d are polynomials of degree <= 2d");
        for (int d = 0; d <= D && 2 * d <= N; ++d) {
            try {
                closed.emplace_back(d, assemble_generating_polynomials(table, d));
                c.expect(true, {});
            } catch (const StabilizationViolation& e) {
                c.fail(e.what());
            }
        }
        report.add(c.result());
    }
    {
        detail::Check c("generating_polynomial_fixed_points", "A_d(1) = A_d(p), B_d(1) = B_d(1/p), R_d(1) = R_d(1/p)");
        const RationalFunction inv_p = RationalFunction::p_power(-1);
        for (const auto& [d, g] : closed) {
            const std::string tag = "d = " + std::to_string(d);
            const auto a1 = g.A.evaluate(one);
            const auto ap = g.A.evaluate(p);
            c.expect(a1 == ap, [&] { return detail::mismatch("A, " + tag, a1, ap); });
            const auto b1 = g.B.evaluate(one);
            const auto bq = g.B.evaluate(inv_p);
            c.expect(b1 == bq, [&] { return detail::mismatch("B, " + tag, b1, bq); });
            const auto r1 = g.R.evaluate(one);
            const auto rq = g.R.evaluate(inv_p);
            c.expect(r1 == rq, [&] { return detail::mismatch("R, " + tag, r1, rq); });
        }
        report.add(c.result());
    }
    {
        detail::Check c("stabilisation",
                        "alpha(n,d) = A_d(1) and beta(n,d) = B_d(1) for n >= 2d; rho(n,d) = R_d(1) for n >= 2d-1");
        for (const auto& [d, g] : closed) {
            const auto a1 = g.A.evaluate(one);
            const auto b1 = g.B.evaluate(one);
            const auto r1 = g.R.evaluate(one);
            for (int n = std::max(d, 2 * d - 1); n <= N; ++n) {
                if (n >= 2 * d) {
                    const auto a = table.at(Quantity::alpha, n, d);
                    c.expect(a == a1, [&] { return detail::mismatch(detail::at_label(Quantity::alpha, n, d), a, a1); });
                    const auto b = table.at(Quantity::beta, n, d);
                    c.expect(b == b1, [&] { return detail::mismatch(detail::at_label(Quantity::beta, n, d), b, b1); });
                }
                const auto r = table.at(Quantity::rho, n, d);
                c.expect(r == r1, [&] { return detail::mismatch(detail::at_label(Quantity::rho, n, d), r, r1); });
            }
        }
        report.add(c.result());
    }
    if (table.has(Quantity::alpha_tilde)) {
        detail::Check c("alpha_tilde_stabilisation", "alpha_tilde(n,d) = alpha(n,d) for n >= 2d");
        for (int d = 0; d <= D; ++d) {
            for (int n = 2 * d; n <= N; ++n) {
                const auto x = table.at(Quantity::alpha_tilde, n, d);
                const auto y = table.at(Quantity::alpha, n, d);
                c.expect(x == y, [&] { return detail::mismatch(detail::at_label(Quantity::alpha_tilde, n, d), x, y); });
            }
        }
        report.add(c.result());
    }
    if (table.has(Quantity::rho_star) && table.has(Quantity::alpha_star) && table.has(Quantity::beta_star)) {
        detail::Check c("star_reciprocal_symmetry", "rho*(n,r; p) = rho*(n,r; 1/p) and alpha*(n,r; 1/p) = beta*(n,r; p)");
        for (int n = 0; n <= N; ++n) {
            for (int r = 0; r <= n; ++r) {
                const auto rho = table.at(Quantity::rho_star, n, r);
                c.expect(is_symmetric(rho),
                         [&] { return detail::at_label(Quantity::rho_star, n, r) + " = " + rho.to_string(); });
                const auto a = reciprocal_substitute(table.at(Quantity::alpha_star, n, r));
                const auto b = table.at(Quantity::beta_star, n, r);
                c.expect(a == b, [&] { return detail::mismatch(detail::at_label(Quantity::alpha_star, n, r), a, b); });
            }
        }
        report.add(c.result());
    }
    if (table.has(Quantity::beta_star)) {
        // No threshold is known for beta* itself, so this only records where
        // each column stops changing within the table; it never fails.
        std::string seen;
        for (int r = 0; r <= N; ++r) {
            int from = N;
            while (from > r && table.at(Quantity::beta_star, from - 1, r) == table.at(Quantity::beta_star, N, r)) {
                --from;
            }
            seen += (r ? ", " : "") + std::string("r=") + std::to_string(r) + ":"
                    + (from < N ? "n>=" + std::to_string(from) : "-");
        }
        report.add({"beta_star_stabilisation_observed", "first n from which beta*(n,r) is constant up to n_max (informational)",
                    true, seen});
    }
    return report;
}

/// Base values, row sums, vanishing n-1 entries, ranges at small primes, and the inversion round trip.
inline VerificationReport verify_probability_axioms(const DensityTable& table,
                                                    const std::vector<long>& primes = {2, 3, 5, 7, 11})
{
    VerificationReport report;
    const int N = table.n_max();
    {
        detail::Check c("moment_base_values", "alpha(n,0) = beta(n,0) = rho(n,0) = 1");
        for (Quantity q : {Quantity::alpha, Quantity::beta, Quantity::rho}) {
            for (int n = 0; n <= N; ++n) {
                const auto v = table.at(q, n, 0);
                c.expect(v.is_one(), [&] { return detail::at_label(q, n, 0) + " = " + v.to_string(); });
            }
        }
        report.add(c.result());
    }
    if (!table.supports_probabilities()) {
        return report;
    }
    const std::array<std::pair<Quantity, Quantity>, 3> pairs{
        {{Quantity::alpha, Quantity::alpha_star}, {Quantity::beta, Quantity::beta_star}, {Quantity::rho, Quantity::rho_star}}};
    detail::Check sums("star_rows_sum_to_one", "sum_r prob(n,r) = 1");
    detail::Check repeated("repeated_root_probability_zero", "prob(n,n-1) = 0 for n >= 2");
    detail::Check range("star_values_in_unit_interval", "0 <= prob(n,r) <= 1 at small primes");
    detail::Check round_trip("moment_probability_round_trip", "moments recovered from probabilities by the inverse transform");
    for (const auto& [moment, star] : pairs) {
        if (!table.has(star)) {
            continue;
        }
        const Grid recovered = star_to_moments(table.grid(star), table.d_max());
        for (int n = 0; n <= N; ++n) {
            RationalFunction total;
            for (int r = 0; r <= n; ++r) {
                const auto v = table.at(star, n, r);
                total += v;
                for (long q : primes) {
                    const Rational x = v.evaluate(Rational(q));
                    range.expect(x >= 0 && x <= 1, [&] {
                        return detail::at_label(star, n, r) + " at p = " + std::to_string(q) + " is " + x.get_str();
                    });
                }
            }
            sums.expect(total.is_one(), [&] { return "row n = " + std::to_string(n) + " of " + std::string(quantity_name(star)) + " sums to " + total.to_string(); });
            if (n >= 2) {
                const auto v = table.at(star, n, n - 1);
                repeated.expect(v.is_zero(), [&] { return detail::at_label(star, n, n - 1) + " = " + v.to_string(); });
            }
            for (int d = 0; d <= std::min(n, table.d_max()); ++d) {
                const auto& x = recovered[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
                const auto y = table.at(moment, n, d);
                round_trip.expect(x == y, [&] { return detail::mismatch(detail::at_label(moment, n, d), x, y); });
            }
        }
    }
    report.add(sums.result());
    report.add(repeated.result());
    report.add(range.result());
    report.add(round_trip.result());
    return report;
}

/// The split-completely (coefficient of t^d) and no-root (u = -1) specialisations.
inline VerificationReport verify_specializations(const DensityTable& table)
{
    VerificationReport report;
    const RationalFunction p = RationalFunction::p();
    const RationalFunction one(1L);
    const int M = std::min(table.n_max(), table.d_max());
    const auto uM = static_cast<std::size_t>(M);

    std::vector<RationalFunction> a_diag;
    std::vector<RationalFunction> b_diag;
    std::vector<RationalFunction> r_diag;
    for (int n = 0; n <= M; ++n) {
        a_diag.push_back(table.at(Quantity::alpha, n, n));
        b_diag.push_back(table.at(Quantity::beta, n, n));
        r_diag.push_back(detail::p_integer(n) * table.at(Quantity::rho, n, n));
    }
    const TruncatedSeries a_split(a_diag, uM);
    const TruncatedSeries b_split(b_diag, uM);
    const TruncatedSeries r_split(r_diag, uM);
    {
        detail::Check c("split_completely_alpha_beta", "sum_n alpha(n,n) (pt)^n = (sum_n beta(n,n) t^n)^p");
        const auto lhs = scale_t(a_split, p);
        const auto rhs = pow_symbolic(b_split, p);
        c.expect(lhs == rhs, [&] { return detail::series_mismatch("split completely", lhs, rhs); });
        report.add(c.result());
    }
    {
        detail::Check c("split_completely_rho", "sum_n (1 + p + ... + p^n) rho(n,n) t^n = (sum_n beta(n,n) t^n)^(p+1)");
        const auto rhs = pow_symbolic(b_split, p + one);
        c.expect(r_split == rhs, [&] { return detail::series_mismatch("split completely", r_split, rhs); });
        report.add(c.result());
    }
    {
        detail::Check c("split_completely_beta_alpha", "beta(n,n) = p^(-C(n,2)) alpha(n,n)");
        for (int n = 0; n <= M; ++n) {
            const auto rhs = RationalFunction::p_power(-detail::choose2(n)) * a_diag[static_cast<std::size_t>(n)];
            c.expect(b_diag[static_cast<std::size_t>(n)] == rhs, [&] {
                return detail::mismatch(detail::at_label(Quantity::beta, n, n), b_diag[static_cast<std::size_t>(n)], rhs);
            });
        }
        report.add(c.result());
    }

    if (!table.supports_probabilities() || !table.has(Quantity::alpha_star) || !table.has(Quantity::rho_star)
        || !table.has(Quantity::beta_star)) {
        return report;
    }
    const int N = table.n_max();
    const auto uN = static_cast<std::size_t>(N);
    auto alternating = [&](Quantity q) {
        TruncatedSeries acc(uN);
        for (int d = 0; d <= table.d_max(); ++d) {
            const auto s = series_from_grid(table, q, d);
            acc = d % 2 == 0 ? acc + s : acc - s;
        }
        return acc;
    };
    auto from_star = [&](Quantity star, bool weighted) {
        std::vector<RationalFunction> c(uN + 1);
        for (int n = 0; n <= N; ++n) {
            c[static_cast<std::size_t>(n)] = table.at(star, n, 0) * (weighted ? detail::p_integer(n) : one);
        }
        TruncatedSeries s(std::move(c), uN);
        const auto one_minus_t = TruncatedSeries(std::vector<RationalFunction>{one, -one}, uN);
        s = one_minus_t * s;
        if (weighted) {
            s = TruncatedSeries(std::vector<RationalFunction>{one, -p}, uN) * s;
        }
        return s;
    };
    const TruncatedSeries a_star = alternating(Quantity::alpha);
    const TruncatedSeries b_star = alternating(Quantity::beta);
    const TruncatedSeries r_star = alternating(Quantity::rho);
    {
        detail::Check c("no_root_series_agree", "A*, B*, R* from alternating sums of A_d, B_d, R_d match the prob(n,0) series");
        const auto a2 = from_star(Quantity::alpha_star, false);
        const auto b2 = from_star(Quantity::beta_star, false);
        const auto r2 = from_star(Quantity::rho_star, true);
        c.expect(a_star == a2, [&] { return detail::series_mismatch("A*", a_star, a2); });
        c.expect(b_star == b2, [&] { return detail::series_mismatch("B*", b_star, b2); });
        c.expect(r_star == r2, [&] { return detail::series_mismatch("R*", r_star, r2); });
        report.add(c.result());
    }
    const TruncatedSeries a_star_scaled = scale_t(a_star, p);
    const TruncatedSeries b_star_power = pow_symbolic(b_star, p);
    {
        detail::Check c("no_root_alpha_beta", "A*(pt) = B*(t)^p");
        c.expect(a_star_scaled == b_star_power, [&] { return detail::series_mismatch("A*(pt)", a_star_scaled, b_star_power); });
        report.add(c.result());
    }
    {
        detail::Check c("no_root_rho", "R*(t) = A*(pt) B*(t) = B*(t)^(p+1)");
        const auto product = a_star_scaled * b_star;
        const auto power = b_star_power * b_star;
        c.expect(r_star == product, [&] { return detail::series_mismatch("A*(pt) B*(t)", r_star, product); });
        c.expect(r_star == power, [&] { return detail::series_mismatch("B*(t)^(p+1)", r_star, power); });
        report.add(c.result());
    }
    {
        detail::Check c("no_root_phi", "B*(t) - t B*(t/p) = Phi(A*(t) - t A*(pt))");
        const auto lhs = b_star - detail::times_t(scale_t(b_star, RationalFunction::p_power(-1)));
        const auto rhs = phi(a_star - detail::times_t(a_star_scaled));
        c.expect(lhs == rhs, [&] { return detail::series_mismatch("no-root Phi relation", lhs, rhs); });
        report.add(c.result());
    }
    return report;
}

/// Exact limits as p -> infinity, with the p^C(k,2) correction for beta.
inline VerificationReport verify_large_p(const DensityTable& table)
{
    VerificationReport report;
    const int N = table.n_max();
    auto expect_limit = [](detail::Check& c, const RationalFunction& f, const Rational& want, const std::string& label) {
        const LargePLimit got = large_p_limit(f);
        c.expect(got.is_finite() && got.value == want,
                 [&] { return label + ": limit " + detail::limit_text(got) + ", expected " + want.get_str(); });
    };
    {
        detail::Check c("moment_limits", "alpha(n,d), rho(n,d) and p^C(k,2) beta(n,d), k = min(d+1,n), tend to 1/d!");
        for (int n = 0; n <= N; ++n) {
            for (int d = 0; d <= std::min(n, table.d_max()); ++d) {
                const Rational want = detail::inverse_factorial(d);
                const int k = std::min(d + 1, n);
                expect_limit(c, table.at(Quantity::alpha, n, d), want, detail::at_label(Quantity::alpha, n, d));
                expect_limit(c, table.at(Quantity::rho, n, d), want, detail::at_label(Quantity::rho, n, d));
                expect_limit(c, RationalFunction::p_power(detail::choose2(k)) * table.at(Quantity::beta, n, d), want,
                             "p^" + std::to_string(detail::choose2(k)) + " " + detail::at_label(Quantity::beta, n, d));
            }
        }
        report.add(c.result());
    }
    if (table.has(Quantity::rho_star) && table.has(Quantity::alpha_star) && table.has(Quantity::beta_star)) {
        detail::Check c("star_limits",
                        "rho*(n,r), alpha*(n,r) tend to (1/r!) sum_{d<=n-r} (-1)^d/d!; p^C(k,2) beta*(n,r) tends to 1/r! for r != n-1");
        for (int n = 0; n <= N; ++n) {
            for (int r = 0; r <= n; ++r) {
                const Rational want = detail::star_limit(n, r);
                expect_limit(c, table.at(Quantity::rho_star, n, r), want, detail::at_label(Quantity::rho_star, n, r));
                expect_limit(c, table.at(Quantity::alpha_star, n, r), want, detail::at_label(Quantity::alpha_star, n, r));
                if (r != n - 1) {
                    const int k = std::min(r + 1, n);
                    expect_limit(c, RationalFunction::p_power(detail::choose2(k)) * table.at(Quantity::beta_star, n, r),
                                 detail::inverse_factorial(r),
                                 "p^" + std::to_string(detail::choose2(k)) + " "
                                     + detail::at_label(Quantity::beta_star, n, r));
                }
            }
        }
        report.add(c.result());
    }
    return report;
}

/// Entrywise equality of the alpha, beta, rho grids of two tables.
inline VerificationReport verify_route_equivalence(const DensityTable& a, const DensityTable& b)
{
    VerificationReport report;
    detail::Check c("route_equivalence", "splitting-type recursion and generating-function route give identical grids");
    if (a.n_max() != b.n_max() || a.d_max() != b.d_max()) {
        c.fail("tables cover different ranges");
    } else {
        for (Quantity q : {Quantity::alpha, Quantity::beta, Quantity::rho}) {
            for (int n = 0; n <= a.n_max(); ++n) {
                for (int d = 0; d <= std::min(n, a.d_max()); ++d) {
                    const auto x = a.at(q, n, d);
                    const auto y = b.at(q, n, d);
                    c.expect(x == y, [&] { return detail::mismatch(detail::at_label(q, n, d), x, y); });
                }
            }
        }
    }
    report.add(c.result());
    return report;
}

/// Every check above, for one (n_max, d_max).
inline VerificationReport verify_all(int n_max, int d_max, const SplittingCounts& counts)
{
    VerificationReport report = verify_splitting_counts(n_max, counts);
    DensityTable table = compute_density_table(n_max, d_max, counts);
    report.append(verify_core_identities(table));
    report.append(verify_probability_axioms(table));
    report.append(verify_specializations(table));
    report.append(verify_large_p(table));
    report.append(verify_route_equivalence(table, compute_genfun_route(n_max, d_max)));
    return report;
}

inline VerificationReport verify_all(int n_max, int d_max) { return verify_all(n_max, d_max, SplittingCounts(n_max)); }

} // namespace padicroots

#endif // PADICROOTS_VERIFY_HPP
