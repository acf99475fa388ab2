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

#ifndef PADICROOTS_SPLITTING_HPP
#define PADICROOTS_SPLITTING_HPP

#include "padicroots/rational_function.hpp"
#include "padicroots/series.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padicroots {

/// One irreducible factor class d^e: degree d, multiplicity e.
struct SplittingPart {
    int degree = 1;
    int exponent = 1;

    friend auto operator<=>(const SplittingPart&, const SplittingPart&) = default;
};

/// Factorisation pattern (d1^e1 d2^e2 ...) of a monic polynomial over F_p.
class SplittingType {
public:
    explicit SplittingType(std::vector<SplittingPart> parts) : parts_(std::move(parts))
    {
        for (const auto& part : parts_) {
            if (part.degree < 1 || part.exponent < 1) {
                throw std::invalid_argument("splitting type parts need positive degree and exponent");
            }
            n_ += part.degree * part.exponent;
        }
        std::sort(parts_.begin(), parts_.end());
    }

    int total_degree() const { return n_; }
    const std::vector<SplittingPart>& parts() const { return parts_; }

    /// Number of parts with degree d.
    int m(int d) const
    {
        return static_cast<int>(
            std::count_if(parts_.begin(), parts_.end(), [d](const SplittingPart& s) { return s.degree == d; }));
    }

    /// Number of parts equal to d^e.
    int m(int d, int e) const
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), SplittingPart{d, e}));
    }

    /// Exponents of the linear parts, ascending.
    std::vector<int> linear_exponents() const
    {
        std::vector<int> r;
        for (const auto& part : parts_) {
            if (part.degree == 1) {
                r.push_back(part.exponent);
            }
        }
        return r;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) {
                s += " ";
            }
            s += std::to_string(parts_[i].degree);
            if (parts_[i].exponent != 1) {
                s += "^" + std::to_string(parts_[i].exponent);
            }
        }
        return s + ")";
    }

    friend bool operator==(const SplittingType&, const SplittingType&) = default;

private:
    std::vector<SplittingPart> parts_;
    int n_ = 0;
};

/// Every splitting type of total degree n, each exactly once, in lexicographic order.
inline std::vector<SplittingType> enumerate_splitting_types(int n)
{
    if (n < 0) {
        throw std::invalid_argument("splitting types need n >= 0");
    }
    std::vector<SplittingPart> candidates;
    for (int d = 1; d <= n; ++d) {
        for (int e = 1; d * e <= n; ++e) {
            candidates.push_back({d, e});
        }
    }
    std::vector<SplittingType> out;
    std::vector<SplittingPart> current;
    // Parts are drawn in non-decreasing candidate order so every multiset appears once.
    auto recurse = [&](auto&& self, std::size_t first, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = first; i < candidates.size(); ++i) {
            const int w = candidates[i].degree * candidates[i].exponent;
            if (w > remaining) {
                continue;
            }
            current.push_back(candidates[i]);
            self(self, i, remaining - w);
            current.pop_back();
        }
    };
    recurse(recurse, 0, n);
    return out;
}

inline int moebius(int k)
{
    int result = 1;
    for (int q = 2; q * q <= k; ++q) {
        if (k % q == 0) {
            k /= q;
            if (k % q == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (k > 1) {
        result = -result;
    }
    return result;
}

/// Number of monic irreducible polynomials of degree d over F_p, as a polynomial in p.
inline RatPolynomial count_irreducible(int d)
{
    if (d < 1) {
        throw std::invalid_argument("irreducible count needs d >= 1");
    }
    RatPolynomial acc;
    for (int k = 1; k <= d; ++k) {
        if (d % k == 0) {
            const int mu = moebius(k);
            if (mu != 0) {
                acc += RatPolynomial::monomial(Rational(mu, d), static_cast<std::size_t>(d / k));
            }
        }
    }
    return acc;
}

/// Number of monic polynomials over F_p with splitting type sigma, from the
/// irreducible counts supplied (index d holds N_d).
inline RationalFunction count_splitting_type(const SplittingType& sigma, const std::vector<RationalFunction>& irreducible)
{
    RationalFunction result(1L);
    int max_degree = 0;
    for (const auto& part : sigma.parts()) {
        max_degree = std::max(max_degree, part.degree);
    }
    for (int d = 1; d <= max_degree; ++d) {
        const int md = sigma.m(d);
        if (md == 0) {
            continue;
        }
        // binom(N_d, m_d) times the multinomial m_d! / prod_e m_{de}!
        result *= symbolic_binomial(irreducible.at(static_cast<std::size_t>(d)), static_cast<unsigned>(md));
        Integer multinomial;
        mpz_fac_ui(multinomial.get_mpz_t(), static_cast<unsigned long>(md));
        for (int e = 1; e <= sigma.total_degree(); ++e) {
            const int mde = sigma.m(d, e);
            if (mde > 1) {
                Integer f;
                mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mde));
                multinomial /= f;
            }
        }
        result *= RationalFunction(multinomial);
    }
    return result;
}

inline RationalFunction count_splitting_type(const SplittingType& sigma)
{
    std::vector<RationalFunction> irreducible(static_cast<std::size_t>(sigma.total_degree()) + 1);
    for (int d = 1; d <= sigma.total_degree(); ++d) {
        irreducible[static_cast<std::size_t>(d)] = RationalFunction(count_irreducible(d));
    }
    return count_splitting_type(sigma, irreducible);
}

/// Splitting types and their counts N_sigma for every n up to n_max, computed once.
/**
 * The density recursions only care about the exponents of the linear
 * factors of sigma, so counts are also aggregated by that exponent multiset.
 * A perturbation of N_d can be injected to exercise failure reporting.
 */
class SplittingCounts {
public:
    using LinearProfile = std::vector<int>;

    explicit SplittingCounts(int n_max, std::map<int, long> irreducible_offsets = {}) : n_max_(n_max)
    {
        if (n_max < 0) {
            throw std::invalid_argument("splitting counts need n_max >= 0");
        }
        irreducible_.resize(static_cast<std::size_t>(n_max) + 1);
        for (int d = 1; d <= n_max; ++d) {
            irreducible_[static_cast<std::size_t>(d)] = RationalFunction(count_irreducible(d));
            if (auto it = irreducible_offsets.find(d); it != irreducible_offsets.end()) {
                irreducible_[static_cast<std::size_t>(d)] += RationalFunction(it->second);
            }
        }
        types_.resize(static_cast<std::size_t>(n_max) + 1);
        counts_.resize(static_cast<std::size_t>(n_max) + 1);
        profiles_.resize(static_cast<std::size_t>(n_max) + 1);
        for (int n = 0; n <= n_max; ++n) {
            const auto un = static_cast<std::size_t>(n);
            types_[un] = enumerate_splitting_types(n);
            for (const auto& sigma : types_[un]) {
                RationalFunction c = count_splitting_type(sigma, irreducible_);
                auto [it, inserted] = profiles_[un].try_emplace(sigma.linear_exponents(), c);
                if (!inserted) {
                    it->second += c;
                }
                counts_[un].push_back(std::move(c));
            }
        }
    }

    int n_max() const { return n_max_; }

    const RationalFunction& irreducible(int d) const { return irreducible_.at(static_cast<std::size_t>(d)); }
    const std::vector<RationalFunction>& irreducible_counts() const { return irreducible_; }
    const std::vector<SplittingType>& types(int n) const { return types_.at(static_cast<std::size_t>(n)); }

    /// N_sigma aligned with types(n).
    const std::vector<RationalFunction>& counts(int n) const { return counts_.at(static_cast<std::size_t>(n)); }

    /// Sum of N_sigma over the sigma of degree n sharing each linear-exponent multiset.
    const std::map<LinearProfile, RationalFunction>& linear_profiles(int n) const
    {
        return profiles_.at(static_cast<std::size_t>(n));
    }

private:
    int n_max_;
    std::vector<RationalFunction> irreducible_;
    std::vector<std::vector<SplittingType>> types_;
    std::vector<std::vector<RationalFunction>> counts_;
    std::vector<std::map<LinearProfile, RationalFunction>> profiles_;
};

/// Outcome of the two product-formula checks on the splitting counts.
struct EulerProductCheck {
    bool euler_product = false;       ///< (1 - pt)^-1 = prod_d (1 - t^d)^-N_d
    bool linear_specialisation = false; ///< sum N_sigma prod x_e t^n = (sum x_n t^n)^p (1-t)^p (1-pt)^-1
    bool passed() const { return euler_product && linear_specialisation; }
};

/// Checks both product formulas coefficient-wise up to t^n_max.
/**
 * The second identity holds for indeterminates x_e; it is tested at a few
 * fixed specialisations of the x_e in Q(p).
 */
inline EulerProductCheck verify_euler_product(int n_max, const SplittingCounts& counts)
{
    if (n_max < 1 || n_max > counts.n_max()) {
        throw std::invalid_argument("verify_euler_product needs 1 <= n_max <= counts.n_max()");
    }
    const auto order = static_cast<std::size_t>(n_max);
    const RationalFunction p = RationalFunction::p();

    std::vector<RationalFunction> geometric(order + 1);
    RationalFunction pk(1L);
    for (std::size_t n = 0; n <= order; ++n) {
        geometric[n] = pk;
        pk *= p;
    }
    const TruncatedSeries inverse_one_minus_pt(geometric, order);

    EulerProductCheck result;
    TruncatedSeries product = TruncatedSeries::one(order);
    for (int d = 1; d <= n_max; ++d) {
        const TruncatedSeries factor
            = TruncatedSeries::one(order) - TruncatedSeries::monomial(RationalFunction(1L), static_cast<std::size_t>(d), order);
        product = product * pow_symbolic(factor, -counts.irreducible(d));
    }
    result.euler_product = product == inverse_one_minus_pt;

    const std::vector<std::vector<RationalFunction>> specialisations = [&] {
        std::vector<std::vector<RationalFunction>> s(3, std::vector<RationalFunction>(order + 1));
        for (std::size_t e = 0; e <= order; ++e) {
            const auto el = static_cast<long>(e);
            s[0][e] = RationalFunction(Rational(el + 2, el + 1));
            s[1][e] = RationalFunction::p_power(-el);
            s[2][e] = RationalFunction(el * el + 1) + p * RationalFunction(el);
        }
        for (auto& x : s) {
            x[0] = RationalFunction(1L);
        }
        return s;
    }();
    const TruncatedSeries one_minus_t
        = TruncatedSeries::one(order) - TruncatedSeries::monomial(RationalFunction(1L), 1, order);
    const TruncatedSeries one_minus_t_to_p = pow_symbolic(one_minus_t, p);
    result.linear_specialisation = true;
    for (const auto& x : specialisations) {
        std::vector<RationalFunction> lhs(order + 1);
        for (int n = 0; n <= n_max; ++n) {
            RationalFunction acc;
            for (const auto& [profile, weight] : counts.linear_profiles(n)) {
                RationalFunction term = weight;
                for (int e : profile) {
                    term *= x[static_cast<std::size_t>(e)];
                }
                acc += term;
            }
            lhs[static_cast<std::size_t>(n)] = acc;
        }
        const TruncatedSeries rhs = pow_symbolic(TruncatedSeries(x, order), p) * one_minus_t_to_p * inverse_one_minus_pt;
        if (TruncatedSeries(lhs, order) != rhs) {
            result.linear_specialisation = false;
        }
    }
    return result;
}

inline EulerProductCheck verify_euler_product(int n_max) { return verify_euler_product(n_max, SplittingCounts(n_max)); }

} // namespace padicroots

#endif // PADICROOTS_SPLITTING_HPP
