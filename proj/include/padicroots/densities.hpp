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

#ifndef PADICROOTS_DENSITIES_HPP
#define PADICROOTS_DENSITIES_HPP

#include "padicroots/rational_function.hpp"
#include "padicroots/series.hpp"
#include "padicroots/splitting.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace padicroots {

/// A consistency condition that the mathematics guarantees was violated.
class InternalFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A generating function turned out not to be a polynomial of degree <= 2d.
class StabilizationViolation : public InternalFault {
public:
    using InternalFault::InternalFault;
};

/// Grids held by a DensityTable.
/**
 * Moment grids are indexed [n][d] (expected number of d-sets of roots);
 * probability ("star") grids are indexed [n][r] (probability of exactly r
 * roots). alpha/beta refer to monic polynomials and to monic polynomials
 * reducing to x^n mod p; rho to arbitrary polynomials; alpha_tilde counts
 * roots in Z_p of arbitrary polynomials.
 */
enum class Quantity { alpha, beta, rho, alpha_tilde, alpha_star, beta_star, rho_star };

inline constexpr std::array<Quantity, 7> kAllQuantities{Quantity::alpha,      Quantity::beta,      Quantity::rho,
                                                        Quantity::alpha_tilde, Quantity::alpha_star,
                                                        Quantity::beta_star,   Quantity::rho_star};

enum class Route { recursion, generating_function };

inline bool is_moment(Quantity q)
{
    return q == Quantity::alpha || q == Quantity::beta || q == Quantity::rho || q == Quantity::alpha_tilde;
}

inline std::string_view quantity_name(Quantity q)
{
    switch (q) {
    case Quantity::alpha: return "alpha";
    case Quantity::beta: return "beta";
    case Quantity::rho: return "rho";
    case Quantity::alpha_tilde: return "alpha_tilde";
    case Quantity::alpha_star: return "alpha_star";
    case Quantity::beta_star: return "beta_star";
    case Quantity::rho_star: return "rho_star";
    }
    return "?";
}

inline std::optional<Quantity> parse_quantity(std::string_view name)
{
    for (Quantity q : kAllQuantities) {
        if (quantity_name(q) == name) {
            return q;
        }
    }
    return std::nullopt;
}

inline std::string_view route_name(Route r) { return r == Route::recursion ? "recursion" : "generating_function"; }

using Grid = std::vector<std::vector<RationalFunction>>;

/// All moment and probability grids for degrees 0..n_max.
class DensityTable {
public:
    DensityTable(int n_max, int d_max) : n_max_(n_max), d_max_(d_max)
    {
        if (d_max < 0 || n_max < d_max) {
            throw std::invalid_argument("density table needs n_max >= d_max >= 0");
        }
    }

    int n_max() const { return n_max_; }
    int d_max() const { return d_max_; }

    /// Star grids need every moment up to d = n.
    bool supports_probabilities() const { return d_max_ >= n_max_; }

    bool has(Quantity q) const { return grids_[index(q)].has_value(); }

    const Grid& grid(Quantity q) const
    {
        if (!has(q)) {
            throw std::logic_error("grid " + std::string(quantity_name(q)) + " has not been computed");
        }
        return *grids_[index(q)];
    }

    Route provenance(Quantity q) const
    {
        grid(q);
        return provenance_[index(q)];
    }

    /// Entry (n, k); moments with d > n are zero.
    RationalFunction at(Quantity q, int n, int k) const
    {
        const Grid& g = grid(q);
        if (n < 0 || n > n_max_ || k < 0) {
            throw std::out_of_range("density table index out of range");
        }
        const auto& row = g[static_cast<std::size_t>(n)];
        if (static_cast<std::size_t>(k) < row.size()) {
            return row[static_cast<std::size_t>(k)];
        }
        if (is_moment(q) ? k <= d_max_ : k <= n) {
            return RationalFunction();
        }
        throw std::out_of_range("density table index out of range");
    }

    /// Row length for n: min(n, d_max)+1 for moments, n+1 for probabilities.
    std::size_t row_size(Quantity q, int n) const
    {
        return static_cast<std::size_t>(is_moment(q) ? std::min(n, d_max_) + 1 : n + 1);
    }

    void set(Quantity q, Grid g, Route route)
    {
        if (!is_moment(q) && !supports_probabilities()) {
            throw std::logic_error("probability grids need d_max >= n_max");
        }
        if (g.size() != static_cast<std::size_t>(n_max_) + 1) {
            throw std::invalid_argument("grid has the wrong number of rows");
        }
        for (int n = 0; n <= n_max_; ++n) {
            if (g[static_cast<std::size_t>(n)].size() != row_size(q, n)) {
                throw std::invalid_argument("grid row " + std::to_string(n) + " has the wrong length");
            }
        }
        grids_[index(q)] = std::move(g);
        provenance_[index(q)] = route;
    }

private:
    static std::size_t index(Quantity q) { return static_cast<std::size_t>(q); }

    int n_max_;
    int d_max_;
    std::array<std::optional<Grid>, kAllQuantities.size()> grids_;
    std::array<Route, kAllQuantities.size()> provenance_{};
};

namespace detail {

inline long choose2(long n) { return n * (n - 1) / 2; }

// 1 + p + ... + p^n
inline RationalFunction p_integer(int n)
{
    return RationalFunction(IntPolynomial(std::vector<Integer>(static_cast<std::size_t>(n) + 1, Integer(1))));
}

using UPolynomial = std::vector<RationalFunction>;

inline UPolynomial multiply_truncated(const UPolynomial& a, const UPolynomial& b)
{
    UPolynomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < r.size(); ++j) {
            if (!b[j].is_zero()) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    return r;
}

// Solves [a11 a12; a21 a22] x = b over Q(p).
inline std::pair<RationalFunction, RationalFunction> solve_2x2(const RationalFunction& a11,
                                                               const RationalFunction& a12,
                                                               const RationalFunction& a21,
                                                               const RationalFunction& a22,
                                                               const RationalFunction& b1, const RationalFunction& b2)
{
    const RationalFunction det = a11 * a22 - a12 * a21;
    if (det.is_zero()) {
        throw InternalFault("singular linear system while solving for the moments");
    }
    return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - a21 * b1) / det};
}

} // namespace detail

/// alpha, beta and alpha_tilde by the splitting-type recursion.
/**
 * For each n ascending, the monic moments alpha(n, .) are a p^-n weighted
 * sum over mod-p splitting types of products of beta(e, .) for the linear
 * factor multiplicities e. Only sigma = (1^n) involves beta(n, .) itself.
 * beta(n, d) in turn is p^-C(n,2) alpha(n, d) plus terms in alpha(s, d),
 * s <= n-2, from the substitution x -> px. The two relations form a 2x2
 * linear system for (alpha(n,d), beta(n,d)); it is singular only at n = 1,
 * where a linear monic polynomial has exactly one root.
 */
inline DensityTable compute_moment_tables_recursive(int n_max, int d_max, const SplittingCounts& counts)
{
    DensityTable table(n_max, d_max);
    if (counts.n_max() < n_max) {
        throw std::invalid_argument("splitting counts do not reach n_max");
    }
    const RationalFunction p = RationalFunction::p();
    const RationalFunction one(1L);
    const auto D = static_cast<std::size_t>(d_max);

    Grid alpha(static_cast<std::size_t>(n_max) + 1);
    Grid beta(static_cast<std::size_t>(n_max) + 1);
    // beta(e, .) as a polynomial in u truncated at u^d_max.
    std::vector<detail::UPolynomial> beta_u;
    std::map<std::vector<int>, detail::UPolynomial> products;
    products[{}] = [&] {
        detail::UPolynomial u(D + 1);
        u[0] = one;
        return u;
    }();
    auto product_for = [&](const std::vector<int>& profile, auto&& self) -> const detail::UPolynomial& {
        if (auto it = products.find(profile); it != products.end()) {
            return it->second;
        }
        std::vector<int> prefix(profile.begin(), profile.end() - 1);
        const detail::UPolynomial& head = self(prefix, self);
        auto value = detail::multiply_truncated(head, beta_u.at(static_cast<std::size_t>(profile.back())));
        return products.emplace(profile, std::move(value)).first->second;
    };

    for (int n = 0; n <= n_max; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const std::size_t width = table.row_size(Quantity::alpha, n);
        alpha[un].assign(width, RationalFunction());
        beta[un].assign(width, RationalFunction());
        alpha[un][0] = one;
        beta[un][0] = one;
        if (n == 1 && width > 1) {
            alpha[un][1] = one;
            beta[un][1] = one;
        } else if (n >= 2) {
            const RationalFunction p_minus_n = RationalFunction::p_power(-n);
            detail::UPolynomial known(D + 1);
            RationalFunction self_weight;
            for (const auto& [profile, weight] : counts.linear_profiles(n)) {
                if (profile.size() == 1 && profile.front() == n) {
                    self_weight = weight * p_minus_n;
                    continue;
                }
                const detail::UPolynomial& prod = product_for(profile, product_for);
                for (std::size_t d = 1; d < width; ++d) {
                    if (!prod[d].is_zero()) {
                        known[d] += weight * prod[d];
                    }
                }
            }
            const RationalFunction lift = RationalFunction::p_power(-detail::choose2(n));
            for (std::size_t d = 1; d < width; ++d) {
                // (p-1) sum_{0<=s<r<n} p^-C(r+1,2) p^s alpha(s,d)
                RationalFunction tail;
                for (int s = static_cast<int>(d); s <= n - 2; ++s) {
                    RationalFunction inner;
                    for (int r = s + 1; r <= n - 1; ++r) {
                        inner += RationalFunction::p_power(s - detail::choose2(r + 1));
                    }
                    tail += inner * alpha[static_cast<std::size_t>(s)][d];
                }
                tail *= p - one;
                auto [a, b] = detail::solve_2x2(one, -self_weight, -lift, one, known[d] * p_minus_n, tail);
                alpha[un][d] = std::move(a);
                beta[un][d] = std::move(b);
            }
        }
        detail::UPolynomial row(D + 1);
        for (std::size_t d = 0; d < width; ++d) {
            row[d] = beta[un][d];
        }
        beta_u.push_back(std::move(row));
    }

    table.set(Quantity::alpha, std::move(alpha), Route::recursion);
    table.set(Quantity::beta, std::move(beta), Route::recursion);

    // alpha_tilde(n,d) = (p-1)/(p^(n+1)-1) sum_m p^m alpha(m,d)
    Grid tilde(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const std::size_t width = table.row_size(Quantity::alpha_tilde, n);
        const RationalFunction weight = (p - one) / (RationalFunction::p_power(n + 1) - one);
        for (std::size_t d = 0; d < width; ++d) {
            RationalFunction acc;
            for (int m = static_cast<int>(d); m <= n; ++m) {
                acc += RationalFunction::p_power(m) * table.at(Quantity::alpha, m, static_cast<int>(d));
            }
            tilde[static_cast<std::size_t>(n)].push_back(weight * acc);
        }
    }
    table.set(Quantity::alpha_tilde, std::move(tilde), Route::recursion);
    return table;
}

inline DensityTable compute_moment_tables_recursive(int n_max, int d_max)
{
    return compute_moment_tables_recursive(n_max, d_max, SplittingCounts(n_max));
}

/// rho from alpha and beta by conditioning on the reduced degree m.
inline DensityTable compute_rho_table(DensityTable table)
{
    const RationalFunction p = RationalFunction::p();
    const RationalFunction one(1L);
    const Route route = table.provenance(Quantity::alpha);
    Grid rho(static_cast<std::size_t>(table.n_max()) + 1);
    for (int n = 0; n <= table.n_max(); ++n) {
        const std::size_t width = table.row_size(Quantity::rho, n);
        const RationalFunction weight = (p - one) / (RationalFunction::p_power(n + 1) - one);
        for (std::size_t ud = 0; ud < width; ++ud) {
            const int d = static_cast<int>(ud);
            RationalFunction acc;
            for (int m = 0; m <= n; ++m) {
                RationalFunction conditional;
                for (int d1 = 0; d1 <= std::min(d, m); ++d1) {
                    const int d2 = d - d1;
                    if (d2 > n - m) {
                        continue;
                    }
                    conditional += table.at(Quantity::alpha, m, d1) * table.at(Quantity::beta, n - m, d2);
                }
                acc += RationalFunction::p_power(m) * conditional;
            }
            rho[static_cast<std::size_t>(n)].push_back(weight * acc);
        }
    }
    table.set(Quantity::rho, std::move(rho), route);
    return table;
}

/// A_d, B_d, R_d for d = 0..d_max as series truncated at t^n_max.
struct GeneratingSeries {
    std::vector<TruncatedSeries> A;
    std::vector<TruncatedSeries> B;
    std::vector<TruncatedSeries> R;
};

/// Solves the two-variable power-series identities for A_d and B_d.
/**
 * For fixed d the coefficients of t^n satisfy
 *   p^n a_n - p b_n = [u^d t^n] (1 + sum_{d'<d} B_d' u^d')^p
 *   b_n - p^-C(n,2) a_n = p^(1-n) b_(n-1) - p^(n-1-C(n,2)) a_(n-1)
 * which is singular only at n = 1; there A_1 = B_1 = t + O(t^2) and
 * A_d = B_d = O(t^d) for d >= 2 fix the solution.
 */
inline GeneratingSeries solve_generating_series(int n_max, int d_max)
{
    if (d_max < 0 || n_max < 0) {
        throw std::invalid_argument("generating series need nonnegative orders");
    }
    const RationalFunction p = RationalFunction::p();
    const RationalFunction one(1L);
    const auto N = static_cast<std::size_t>(n_max);
    const auto D = static_cast<std::size_t>(d_max);
    GeneratingSeries gs;
    gs.A.push_back(TruncatedSeries::one(N));
    gs.B.push_back(TruncatedSeries::one(N));
    for (std::size_t d = 1; d <= D; ++d) {
        std::vector<TruncatedSeries> lower(gs.B.begin(), gs.B.end());
        lower.emplace_back(N);
        const TruncatedSeries known = pow_symbolic(BivariateSeries(std::move(lower)), p)[d];
        std::vector<RationalFunction> a(N + 1);
        std::vector<RationalFunction> b(N + 1);
        for (std::size_t n = 0; n <= N; ++n) {
            if (n == 1) {
                a[n] = b[n] = RationalFunction(d == 1 ? 1L : 0L);
                continue;
            }
            const long nl = static_cast<long>(n);
            const RationalFunction lift = RationalFunction::p_power(-detail::choose2(nl));
            RationalFunction rhs2;
            if (n > 0) {
                rhs2 = RationalFunction::p_power(1 - nl) * b[n - 1]
                       - RationalFunction::p_power(nl - 1 - detail::choose2(nl)) * a[n - 1];
            }
            auto [an, bn] = detail::solve_2x2(RationalFunction::p_power(nl), -p, -lift, one, known[n], rhs2);
            a[n] = std::move(an);
            b[n] = std::move(bn);
        }
        gs.A.emplace_back(std::move(a), N);
        gs.B.emplace_back(std::move(b), N);
    }
    const BivariateSeries rho_bv = pow_symbolic(BivariateSeries(gs.B), p + one);
    for (std::size_t d = 0; d <= D; ++d) {
        gs.R.push_back(rho_bv[d]);
    }
    return gs;
}

/// Independent alpha, beta, rho grids from the generating-function identities.
inline DensityTable compute_genfun_route(int n_max, int d_max)
{
    DensityTable table(n_max, d_max);
    const GeneratingSeries gs = solve_generating_series(n_max, d_max);
    Grid alpha(static_cast<std::size_t>(n_max) + 1);
    Grid beta(static_cast<std::size_t>(n_max) + 1);
    Grid rho(static_cast<std::size_t>(n_max) + 1);
    for (int d = 0; d <= d_max; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        RationalFunction sum_a;
        RationalFunction sum_b;
        for (int n = 0; n <= n_max; ++n) {
            const auto un = static_cast<std::size_t>(n);
            // Dividing out (1-t) is a running sum; dividing out (1-t)(1-pt) is a
            // convolution with 1 + p + ... + p^k.
            sum_a += gs.A[ud][un];
            sum_b += gs.B[ud][un];
            RationalFunction weighted;
            for (int j = 0; j <= n; ++j) {
                const auto& r = gs.R[ud][static_cast<std::size_t>(j)];
                if (!r.is_zero()) {
                    weighted += r * detail::p_integer(n - j);
                }
            }
            if (d <= n) {
                alpha[un].push_back(sum_a);
                beta[un].push_back(sum_b);
                rho[un].push_back(weighted / detail::p_integer(n));
            } else if (!sum_a.is_zero() || !sum_b.is_zero() || !weighted.is_zero()) {
                throw InternalFault("generating functions give a nonzero moment with d > n");
            }
        }
    }
    table.set(Quantity::alpha, std::move(alpha), Route::generating_function);
    table.set(Quantity::beta, std::move(beta), Route::generating_function);
    table.set(Quantity::rho, std::move(rho), Route::generating_function);
    return table;
}

/// prob(n, r) = sum_d (-1)^(d-r) binom(d, r) moment(n, d).
inline Grid moments_to_star(const DensityTable& table, Quantity moment)
{
    if (!table.supports_probabilities()) {
        throw std::logic_error("probabilities need every moment up to d = n (d_max >= n_max)");
    }
    Grid star(static_cast<std::size_t>(table.n_max()) + 1);
    for (int n = 0; n <= table.n_max(); ++n) {
        for (int r = 0; r <= n; ++r) {
            RationalFunction acc;
            Integer binom;
            for (int d = r; d <= n; ++d) {
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r));
                const RationalFunction term = RationalFunction(binom) * table.at(moment, n, d);
                acc = (d - r) % 2 == 0 ? acc + term : acc - term;
            }
            star[static_cast<std::size_t>(n)].push_back(std::move(acc));
        }
    }
    return star;
}

/// moment(n, d) = sum_r binom(r, d) prob(n, r), for d <= min(n, d_max).
inline Grid star_to_moments(const Grid& star, int d_max)
{
    Grid moments(star.size());
    for (std::size_t n = 0; n < star.size(); ++n) {
        const int width = std::min(static_cast<int>(n), d_max) + 1;
        for (int d = 0; d < width; ++d) {
            RationalFunction acc;
            Integer binom;
            for (std::size_t r = static_cast<std::size_t>(d); r < star[n].size(); ++r) {
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(d));
                acc += RationalFunction(binom) * star[n][r];
            }
            moments[n].push_back(std::move(acc));
        }
    }
    return moments;
}

/// Fills every star grid whose moment grid is present.
inline DensityTable moments_to_probabilities(DensityTable table)
{
    const std::array<std::pair<Quantity, Quantity>, 3> pairs{
        {{Quantity::alpha, Quantity::alpha_star}, {Quantity::beta, Quantity::beta_star}, {Quantity::rho, Quantity::rho_star}}};
    for (const auto& [moment, star] : pairs) {
        if (table.has(moment)) {
            table.set(star, moments_to_star(table, moment), table.provenance(moment));
        }
    }
    return table;
}

/// The full recursion-route table; probabilities are included when d_max >= n_max.
inline DensityTable compute_density_table(int n_max, int d_max, const SplittingCounts& counts)
{
    DensityTable table = compute_rho_table(compute_moment_tables_recursive(n_max, d_max, counts));
    if (table.supports_probabilities()) {
        table = moments_to_probabilities(std::move(table));
    }
    return table;
}

inline DensityTable compute_density_table(int n_max, int d_max)
{
    return compute_density_table(n_max, d_max, SplittingCounts(n_max));
}

/// A_d, B_d or R_d rebuilt from a grid column, truncated at t^n_max.
inline TruncatedSeries series_from_grid(const DensityTable& table, Quantity q, int d)
{
    const auto N = static_cast<std::size_t>(table.n_max());
    std::vector<RationalFunction> c(N + 1);
    const RationalFunction p = RationalFunction::p();
    auto value = [&](int n) { return n < 0 ? RationalFunction() : table.at(q, n, d); };
    for (int n = 0; n <= table.n_max(); ++n) {
        if (q == Quantity::rho) {
            // (1-t)(1-pt) sum [n] rho(n,d) t^n
            auto weighted = [&](int m) { return m < 0 ? RationalFunction() : detail::p_integer(m) * value(m); };
            c[static_cast<std::size_t>(n)]
                = weighted(n) - (p + RationalFunction(1L)) * weighted(n - 1) + p * weighted(n - 2);
        } else {
            c[static_cast<std::size_t>(n)] = value(n) - value(n - 1);
        }
    }
    return TruncatedSeries(std::move(c), N);
}

/// A_d, B_d, R_d as polynomials of degree <= 2d.
struct GeneratingPolynomials {
    TruncatedSeries A;
    TruncatedSeries B;
    TruncatedSeries R;
};

/// Closes the generating functions of column d into polynomials.
/**
 * Needs n_max >= 2d. Every coefficient of t^k for 2d < k <= n_max must
 * vanish; a nonzero one raises StabilizationViolation.
 */
inline GeneratingPolynomials assemble_generating_polynomials(const DensityTable& table, int d)
{
    if (d < 0 || d > table.d_max()) {
        throw std::out_of_range("d outside the table");
    }
    if (table.n_max() < 2 * d) {
        throw std::invalid_argument("closing the generating functions of column d needs n_max >= 2d");
    }
    const auto bound = static_cast<std::size_t>(2 * d);
    auto close = [&](Quantity q) {
        try {
            return series_from_grid(table, q, d).as_exact_polynomial(bound).truncated(bound);
        } catch (const std::domain_error& e) {
            throw StabilizationViolation(std::string(quantity_name(q)) + " generating function for d = "
                                         + std::to_string(d) + ": " + e.what());
        }
    };
    return {close(Quantity::alpha), close(Quantity::beta), close(Quantity::rho)};
}

} // namespace padicroots

#endif // PADICROOTS_DENSITIES_HPP
