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

#ifndef PADICROOTS_SERIES_HPP
#define PADICROOTS_SERIES_HPP

#include "padicroots/rational_function.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padicroots {

/// Power series in t with coefficients in Q(p), known up to t^order.
/**
 * Binary operations truncate to the smaller order of their operands. A
 * series may carry an "exact polynomial" flag recording that every
 * coefficient beyond degree_bound() is zero at all orders; the flag is only
 * ever set explicitly, never inferred from trailing zeros.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}

    TruncatedSeries(std::vector<RationalFunction> coeffs, std::size_t order) : c_(std::move(coeffs))
    {
        c_.resize(order + 1);
    }

    static TruncatedSeries one(std::size_t order)
    {
        TruncatedSeries s(order);
        s.c_[0] = RationalFunction(1L);
        return s;
    }

    /// c * t^k.
    static TruncatedSeries monomial(const RationalFunction& c, std::size_t k, std::size_t order)
    {
        TruncatedSeries s(order);
        if (k <= order) {
            s.c_[k] = c;
        }
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const RationalFunction& operator[](std::size_t n) const { return c_.at(n); }
    const std::vector<RationalFunction>& coefficients() const { return c_; }

    bool is_exact_polynomial() const { return degree_bound_.has_value(); }
    std::optional<std::size_t> degree_bound() const { return degree_bound_; }

    /// Flag as a polynomial of degree <= bound; throws if a stored coefficient contradicts it.
    TruncatedSeries as_exact_polynomial(std::size_t bound) const
    {
        for (std::size_t n = bound + 1; n < c_.size(); ++n) {
            if (!c_[n].is_zero()) {
                throw std::domain_error("coefficient of t^" + std::to_string(n) + " is nonzero above the degree bound "
                                        + std::to_string(bound));
            }
        }
        TruncatedSeries r(*this);
        r.degree_bound_ = bound;
        return r;
    }

    TruncatedSeries truncated(std::size_t order) const
    {
        if (order > this->order() && !degree_bound_) {
            throw std::invalid_argument("cannot raise the truncation order of a series");
        }
        TruncatedSeries r(std::vector<RationalFunction>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(
                                                                                   std::min(order, this->order()) + 1)),
                          order);
        r.degree_bound_ = degree_bound_;
        return r;
    }

    /// Value at t = x; only defined for flagged polynomials.
    RationalFunction evaluate(const RationalFunction& x) const
    {
        if (!degree_bound_) {
            throw std::logic_error("evaluating a truncated series that is not known to be a polynomial");
        }
        RationalFunction acc;
        const std::size_t top = std::min(*degree_bound_, order());
        for (std::size_t k = top + 1; k-- > 0;) {
            acc = acc * x + c_[k];
        }
        return acc;
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r(order());
        for (std::size_t n = 0; n < c_.size(); ++n) {
            r.c_[n] = -c_[n];
        }
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n < r.c_.size(); ++n) {
            r.c_[n] = a.c_[n] + b.c_[n];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n < r.c_.size(); ++n) {
            r.c_[n] = a.c_[n] - b.c_[n];
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        const std::size_t n_max = r.order();
        for (std::size_t i = 0; i <= n_max; ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n_max; ++j) {
                if (!b.c_[j].is_zero()) {
                    r.c_[i + j] += a.c_[i] * b.c_[j];
                }
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const RationalFunction& s, const TruncatedSeries& a)
    {
        TruncatedSeries r(a.order());
        for (std::size_t n = 0; n < a.c_.size(); ++n) {
            r.c_[n] = s * a.c_[n];
        }
        return r;
    }

    /// Equality of the stored coefficients up to the common order.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        for (std::size_t k = 0; k <= n; ++k) {
            if (a.c_[k] != b.c_[k]) {
                return false;
            }
        }
        return true;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const RationalFunction& x) { return x.is_zero(); });
    }

private:
    std::vector<RationalFunction> c_;
    std::optional<std::size_t> degree_bound_;
};

/// t -> c t: the coefficient of t^n is multiplied by c^n.
inline TruncatedSeries scale_t(const TruncatedSeries& a, const RationalFunction& c)
{
    std::vector<RationalFunction> r(a.order() + 1);
    RationalFunction power(1L);
    for (std::size_t n = 0; n <= a.order(); ++n) {
        r[n] = power * a[n];
        power *= c;
    }
    TruncatedSeries s(std::move(r), a.order());
    if (a.degree_bound()) {
        return s.as_exact_polynomial(*a.degree_bound());
    }
    return s;
}

/// Multiplies the coefficient of t^n by p^(-n(n-1)/2).
inline TruncatedSeries phi(const TruncatedSeries& a)
{
    std::vector<RationalFunction> r(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n) {
        const long e = static_cast<long>(n * (n - (n > 0 ? 1 : 0)) / 2);
        r[n] = a[n].is_zero() ? a[n] : RationalFunction::p_power(-e) * a[n];
    }
    return TruncatedSeries(std::move(r), a.order());
}

/// (1 + T)^E = sum_k binom(E, k) T^k with T = a - 1.
inline TruncatedSeries pow_symbolic(const TruncatedSeries& a, const RationalFunction& exponent)
{
    if (!a[0].is_one()) {
        throw std::domain_error("symbolic power needs a series with constant term 1");
    }
    const std::size_t order = a.order();
    const TruncatedSeries tail = a - TruncatedSeries::one(order);
    TruncatedSeries result = TruncatedSeries::one(order);
    TruncatedSeries power = TruncatedSeries::one(order);
    RationalFunction binom(1L);
    for (std::size_t k = 1; k <= order; ++k) {
        power = power * tail;
        if (power.is_zero()) {
            break;
        }
        binom = binom * (exponent - RationalFunction(static_cast<long>(k - 1)))
                * RationalFunction(Rational(1, static_cast<unsigned long>(k)));
        if (!binom.is_zero()) {
            result = result + binom * power;
        }
    }
    return result;
}

/// Power series in two variables, stored as a polynomial in u truncated at u^u_order
/// whose coefficients are TruncatedSeries in t sharing one t-order.
class BivariateSeries {
public:
    BivariateSeries(std::size_t u_order, std::size_t t_order) : terms_(u_order + 1, TruncatedSeries(t_order)) {}

    explicit BivariateSeries(std::vector<TruncatedSeries> terms) : terms_(std::move(terms))
    {
        if (terms_.empty()) {
            throw std::invalid_argument("bivariate series needs at least the u^0 term");
        }
        const std::size_t t_order = terms_.front().order();
        for (auto& s : terms_) {
            if (s.order() < t_order) {
                throw std::invalid_argument("all u-coefficients must share one t-order");
            }
            if (s.order() > t_order) {
                s = s.truncated(t_order);
            }
        }
    }

    static BivariateSeries one(std::size_t u_order, std::size_t t_order)
    {
        BivariateSeries s(u_order, t_order);
        s.terms_[0] = TruncatedSeries::one(t_order);
        return s;
    }

    std::size_t u_order() const { return terms_.size() - 1; }
    std::size_t t_order() const { return terms_.front().order(); }

    /// The coefficient of u^d.
    const TruncatedSeries& operator[](std::size_t d) const { return terms_.at(d); }

    BivariateSeries truncated(std::size_t u_order, std::size_t t_order) const
    {
        if (u_order > this->u_order() || t_order > this->t_order()) {
            throw std::invalid_argument("cannot raise truncation orders");
        }
        std::vector<TruncatedSeries> r;
        for (std::size_t d = 0; d <= u_order; ++d) {
            r.push_back(terms_[d].truncated(t_order));
        }
        return BivariateSeries(std::move(r));
    }

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b)
    {
        const std::size_t du = std::min(a.u_order(), b.u_order());
        const std::size_t dt = std::min(a.t_order(), b.t_order());
        std::vector<TruncatedSeries> r;
        for (std::size_t d = 0; d <= du; ++d) {
            r.push_back((a.terms_[d] + b.terms_[d]).truncated(dt));
        }
        return BivariateSeries(std::move(r));
    }

    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b)
    {
        const std::size_t du = std::min(a.u_order(), b.u_order());
        const std::size_t dt = std::min(a.t_order(), b.t_order());
        std::vector<TruncatedSeries> r;
        for (std::size_t d = 0; d <= du; ++d) {
            r.push_back((a.terms_[d] - b.terms_[d]).truncated(dt));
        }
        return BivariateSeries(std::move(r));
    }

    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b)
    {
        const std::size_t du = std::min(a.u_order(), b.u_order());
        const std::size_t dt = std::min(a.t_order(), b.t_order());
        BivariateSeries r(du, dt);
        for (std::size_t i = 0; i <= du; ++i) {
            if (a.terms_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= du; ++j) {
                if (!b.terms_[j].is_zero()) {
                    r.terms_[i + j] = r.terms_[i + j] + a.terms_[i] * b.terms_[j];
                }
            }
        }
        return r;
    }

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b)
    {
        const std::size_t du = std::min(a.u_order(), b.u_order());
        for (std::size_t d = 0; d <= du; ++d) {
            if (a.terms_[d] != b.terms_[d]) {
                return false;
            }
        }
        return true;
    }
    friend bool operator!=(const BivariateSeries& a, const BivariateSeries& b) { return !(a == b); }

    bool is_zero() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const TruncatedSeries& s) { return s.is_zero(); });
    }

    /// Substitutes a value for u, e.g. u = -1.
    TruncatedSeries evaluate_u(const RationalFunction& u) const
    {
        TruncatedSeries acc(t_order());
        for (std::size_t d = terms_.size(); d-- > 0;) {
            acc = u * acc + terms_[d];
        }
        return acc;
    }

private:
    std::vector<TruncatedSeries> terms_;
};

/// t -> c t in every u-coefficient.
inline BivariateSeries scale_t(const BivariateSeries& a, const RationalFunction& c)
{
    std::vector<TruncatedSeries> r;
    for (std::size_t d = 0; d <= a.u_order(); ++d) {
        r.push_back(scale_t(a[d], c));
    }
    return BivariateSeries(std::move(r));
}

/// (1 + T)^E for a bivariate series whose u^0 t^0 coefficient is 1.
inline BivariateSeries pow_symbolic(const BivariateSeries& a, const RationalFunction& exponent)
{
    if (!a[0][0].is_one()) {
        throw std::domain_error("symbolic power needs a series with constant term 1");
    }
    const std::size_t du = a.u_order();
    const std::size_t dt = a.t_order();
    const BivariateSeries tail = a - BivariateSeries::one(du, dt);
    BivariateSeries result = BivariateSeries::one(du, dt);
    BivariateSeries power = BivariateSeries::one(du, dt);
    RationalFunction binom(1L);
    // T has total (u, t)-order at least 1, so T^k vanishes once k exceeds du + dt.
    for (std::size_t k = 1; k <= du + dt; ++k) {
        power = power * tail;
        if (power.is_zero()) {
            break;
        }
        binom = binom * (exponent - RationalFunction(static_cast<long>(k - 1)))
                * RationalFunction(Rational(1, static_cast<unsigned long>(k)));
        if (binom.is_zero()) {
            continue;
        }
        std::vector<TruncatedSeries> terms;
        for (std::size_t d = 0; d <= du; ++d) {
            terms.push_back(result[d] + binom * power[d]);
        }
        result = BivariateSeries(std::move(terms));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Rendering.
// ---------------------------------------------------------------------------

/// "c0 + c1 t + c2 t^2 + ..." with zero terms omitted.
inline std::string format_series(const TruncatedSeries& s, bool show_order = true)
{
    std::string out;
    const std::size_t top = s.degree_bound() ? std::min(*s.degree_bound(), s.order()) : s.order();
    for (std::size_t n = 0; n <= top; ++n) {
        const RationalFunction& c = s[n];
        if (c.is_zero()) {
            continue;
        }
        std::string body;
        bool negative = false;
        RationalFunction mag = c;
        // Pull a sign out of single-term numerators so "- p t^2" reads naturally.
        if (c.numerator().coefficients().size() > 0 && c.numerator().leading() < 0) {
            const auto& nc = c.numerator().coefficients();
            const auto nonzero = std::count_if(nc.begin(), nc.end(), [](const Integer& x) { return x != 0; });
            if (nonzero == 1) {
                negative = true;
                mag = -c;
            }
        }
        const std::string cs = mag.to_string();
        const bool compound = cs.find_first_of("+-/", 1) != std::string::npos || cs[0] == '-';
        const std::string var = n == 0 ? "" : (n == 1 ? "t" : "t^" + std::to_string(n));
        if (n == 0) {
            body = cs;
        } else if (mag.is_one()) {
            body = var;
        } else {
            body = (compound ? "(" + cs + ")" : cs) + " " + var;
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    if (out.empty()) {
        out = "0";
    }
    if (show_order && !s.is_exact_polynomial()) {
        out += " + O(t^" + std::to_string(s.order() + 1) + ")";
    }
    return out;
}

inline nlohmann::json to_json(const TruncatedSeries& s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coefficients()) {
        coeffs.push_back(c.to_string());
    }
    nlohmann::json j{{"order", s.order()}, {"coefficients", std::move(coeffs)}};
    if (s.degree_bound()) {
        j["exact_polynomial_degree_bound"] = *s.degree_bound();
    }
    return j;
}

} // namespace padicroots

#endif // PADICROOTS_SERIES_HPP
