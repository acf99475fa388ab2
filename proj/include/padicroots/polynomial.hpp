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

#ifndef PADICROOTS_POLYNOMIAL_HPP
#define PADICROOTS_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padicroots {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial in the indeterminate p.
/**
 * Coefficient i multiplies p^i. The coefficient vector never carries a zero
 * leading entry, so the zero polynomial is the empty vector and equality is
 * plain vector comparison.
 */
template <typename T>
class Polynomial {
public:
    using coefficient_type = T;

    Polynomial() = default;

    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }

    static Polynomial monomial(const T& value, std::size_t power)
    {
        std::vector<T> c(power + 1, T(0));
        c[power] = value;
        return Polynomial(std::move(c));
    }

    /// The indeterminate p itself.
    static Polynomial variable() { return monomial(T(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    const T& leading() const
    {
        if (c_.empty()) {
            throw std::domain_error("leading coefficient of the zero polynomial");
        }
        return c_.back();
    }

    T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coefficients() const { return c_; }

    /// Largest k with p^k dividing the polynomial (0 for the zero polynomial).
    std::size_t low_degree() const
    {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == 0) {
            ++k;
        }
        return k == c_.size() ? 0 : k;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), T(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), T(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    Polynomial& operator*=(const T& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) {
            x *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const
    {
        Polynomial r(*this);
        for (auto& x : r.c_) {
            x = -x;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Horner evaluation in any ring U that accepts T coefficients.
    template <typename U>
    U evaluate(const U& x) const
    {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + U(*it);
        }
        return acc;
    }

    /// p^deg * f(1/p): the coefficient sequence read backwards.
    Polynomial reversed() const
    {
        std::vector<T> r(c_.rbegin(), c_.rend());
        return Polynomial(std::move(r));
    }

    /// f * p^k.
    Polynomial shifted_up(std::size_t k) const
    {
        if (is_zero()) {
            return {};
        }
        std::vector<T> r(k, T(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return Polynomial(std::move(r));
    }

    /// f / p^k; the low k coefficients must vanish.
    Polynomial shifted_down(std::size_t k) const
    {
        if (is_zero()) {
            return {};
        }
        for (std::size_t i = 0; i < k && i < c_.size(); ++i) {
            if (c_[i] != 0) {
                throw std::domain_error("polynomial is not divisible by the requested power of p");
            }
        }
        if (k >= c_.size()) {
            throw std::domain_error("polynomial is not divisible by the requested power of p");
        }
        return Polynomial(std::vector<T>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

// ---------------------------------------------------------------------------
// Integer polynomial algorithms: content, exact division, gcd.
// ---------------------------------------------------------------------------

/// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
inline Integer content(const IntPolynomial& f)
{
    Integer g = 0;
    for (const auto& c : f.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

/// f divided by its content, with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& f)
{
    if (f.is_zero()) {
        return f;
    }
    Integer g = content(f);
    if (f.leading() < 0) {
        g = -g;
    }
    if (g == 1) {
        return f;
    }
    std::vector<Integer> c = f.coefficients();
    for (auto& x : c) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return IntPolynomial(std::move(c));
}

/// Quotient a / b in Z[p]; throws unless b divides a exactly.
inline IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.is_zero()) {
        return {};
    }
    if (a.degree() < b.degree()) {
        throw std::domain_error("inexact polynomial division");
    }
    std::vector<Integer> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> q(r.size() - db, 0);
    const Integer& lb = bc.back();
    Integer rem;
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) {
            continue;
        }
        Integer& qk = q[k - db];
        mpz_fdiv_qr(qk.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
        if (rem != 0) {
            throw std::domain_error("inexact polynomial division");
        }
        for (std::size_t j = 0; j <= db; ++j) {
            r[k - db + j] -= qk * bc[j];
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (r[i] != 0) {
            throw std::domain_error("inexact polynomial division");
        }
    }
    return IntPolynomial(std::move(q));
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) {
        throw std::domain_error("pseudo-remainder by zero");
    }
    if (a.degree() < b.degree()) {
        return a;
    }
    std::vector<Integer> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const Integer& lb = bc.back();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) {
            for (std::size_t i = 0; i < k; ++i) {
                r[i] *= lb;
            }
            continue;
        }
        const Integer lead = r[k];
        for (std::size_t i = 0; i < k; ++i) {
            r[i] *= lb;
        }
        for (std::size_t j = 0; j < db; ++j) {
            r[k - db + j] -= lead * bc[j];
        }
        r[k] = 0;
    }
    r.resize(db);
    return IntPolynomial(std::move(r));
}

namespace detail {

// Modulus for the coprimality screen; below 2^62 so products fit in __int128.
inline constexpr std::uint64_t kScreenPrime = 4611686018427387847ULL;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline std::vector<std::uint64_t> reduce_mod(const IntPolynomial& f, std::uint64_t m)
{
    std::vector<std::uint64_t> r;
    r.reserve(f.coefficients().size());
    const Integer mod_z(static_cast<unsigned long>(m));
    Integer t;
    for (const auto& c : f.coefficients()) {
        mpz_fdiv_r(t.get_mpz_t(), c.get_mpz_t(), mod_z.get_mpz_t());
        const std::uint64_t v = mpz_get_ui(t.get_mpz_t());
        r.push_back(v);
    }
    while (!r.empty() && r.back() == 0) {
        r.pop_back();
    }
    return r;
}

// Degree of gcd(a, b) over F_m.
inline int modular_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t m)
{
    while (!b.empty()) {
        if (a.size() < b.size()) {
            std::swap(a, b);
            continue;
        }
        const std::uint64_t inv = powmod(b.back(), m - 2, m);
        while (a.size() >= b.size() && !a.empty()) {
            const std::uint64_t q = mulmod(a.back(), inv, m);
            const std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                const std::uint64_t s = mulmod(q, b[j], m);
                a[off + j] = a[off + j] >= s ? a[off + j] - s : a[off + j] + m - s;
            }
            while (!a.empty() && a.back() == 0) {
                a.pop_back();
            }
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

} // namespace detail

/// Primitive gcd in Z[p], normalised to a positive leading coefficient.
/**
 * Integer content is ignored: the result is the primitive part of the true
 * gcd. A modular screen proves coprimality cheaply in the common case; the
 * primitive remainder sequence runs otherwise.
 */
inline IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero()) {
        return primitive_part(b);
    }
    if (b.is_zero()) {
        return primitive_part(a);
    }
    const std::size_t va = a.low_degree();
    const std::size_t vb = b.low_degree();
    const std::size_t v = std::min(va, vb);
    IntPolynomial x = primitive_part(a.shifted_down(va));
    IntPolynomial y = primitive_part(b.shifted_down(vb));
    auto with_power = [v](IntPolynomial g) { return v == 0 ? g : g.shifted_up(v); };
    if (x.is_constant() || y.is_constant()) {
        return with_power(IntPolynomial{Integer(1)});
    }
    {
        const auto m = detail::kScreenPrime;
        auto xm = detail::reduce_mod(x, m);
        auto ym = detail::reduce_mod(y, m);
        if (static_cast<int>(xm.size()) - 1 == x.degree() && static_cast<int>(ym.size()) - 1 == y.degree()
            && detail::modular_gcd_degree(std::move(xm), std::move(ym), m) == 0) {
            return with_power(IntPolynomial{Integer(1)});
        }
    }
    if (x.degree() < y.degree()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = primitive_part(r);
        if (y.is_constant() && !y.is_zero()) {
            return with_power(IntPolynomial{Integer(1)});
        }
    }
    return with_power(primitive_part(x));
}

} // namespace padicroots

#endif // PADICROOTS_POLYNOMIAL_HPP
