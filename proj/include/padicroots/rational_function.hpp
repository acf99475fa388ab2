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

#ifndef PADICROOTS_RATIONAL_FUNCTION_HPP
#define PADICROOTS_RATIONAL_FUNCTION_HPP

#include "padicroots/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace padicroots {

/// Evaluation hit a zero of the denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An element of Q(p), the field of rational functions in the symbolic prime.
/**
 * Values are kept in canonical form:
 * - numerator and denominator are integer polynomials with no common factor,
 * - the joint integer content of both is 1,
 * - the denominator's leading coefficient is positive,
 * - zero is 0/1.
 *
 * Equality is therefore comparison of the stored polynomials.
 */
class RationalFunction {
public:
    RationalFunction() : den_{Integer(1)} {}

    RationalFunction(long value) : num_{Integer(value)}, den_{Integer(1)} {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const Integer& value) : num_{value}, den_{Integer(1)} {} // NOLINT(google-explicit-constructor)

    RationalFunction(const Rational& value) // NOLINT(google-explicit-constructor)
    {
        Rational v(value);
        v.canonicalize();
        num_ = IntPolynomial{v.get_num()};
        den_ = IntPolynomial{v.get_den()};
    }

    RationalFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        canonicalize();
    }

    explicit RationalFunction(IntPolynomial num) : num_(std::move(num)), den_{Integer(1)} {}

    /// A polynomial with rational coefficients, denominators cleared.
    explicit RationalFunction(const RatPolynomial& f)
    {
        Integer l = 1;
        for (const auto& c : f.coefficients()) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        }
        std::vector<Integer> n;
        n.reserve(f.coefficients().size());
        for (const auto& c : f.coefficients()) {
            n.push_back(c.get_num() * (l / c.get_den()));
        }
        num_ = IntPolynomial(std::move(n));
        den_ = IntPolynomial{l};
        normalize_content();
    }

    /// The indeterminate p.
    static RationalFunction p() { return RationalFunction(IntPolynomial::variable()); }

    /// p^k for any integer k.
    static RationalFunction p_power(long k)
    {
        RationalFunction r;
        if (k >= 0) {
            r.num_ = IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(k));
        } else {
            r.num_ = IntPolynomial{Integer(1)};
            r.den_ = IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(-k));
        }
        return r;
    }

    const IntPolynomial& numerator() const { return num_; }
    const IntPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// The value of a constant function.
    Rational constant_value() const
    {
        if (!is_constant()) {
            throw std::domain_error("rational function is not constant");
        }
        Rational r(num_.coefficient(0), den_.coefficient(0));
        r.canonicalize();
        return r;
    }

    RationalFunction operator-() const
    {
        RationalFunction r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return add(a, b, false);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return add(a, b, true);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (a.den_.is_one() && b.den_.is_one()) {
            return RationalFunction(a.num_ * b.num_);
        }
        const IntPolynomial g1 = primitive_gcd(a.num_, b.den_);
        const IntPolynomial g2 = primitive_gcd(b.num_, a.den_);
        RationalFunction r;
        r.num_ = quotient(a.num_, g1) * quotient(b.num_, g2);
        r.den_ = quotient(a.den_, g2) * quotient(b.den_, g1);
        r.normalize_content();
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        return a * b.inverse();
    }

    RationalFunction inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("division by the zero rational function");
        }
        RationalFunction r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_content();
        return r;
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Exact value at a rational point q.
    Rational evaluate(const Rational& q) const
    {
        const Rational d = den_.evaluate<Rational>(q);
        if (d == 0) {
            throw PoleError("rational function has a pole at p = " + q.get_str());
        }
        Rational r = num_.evaluate<Rational>(q) / d;
        r.canonicalize();
        return r;
    }

    /// The canonical form of f(1/p).
    /**
     * Reversing the coefficient sequences of numerator and denominator and
     * restoring the degree difference as a power of p needs no gcd: the
     * reversals stay coprime and are not divisible by p.
     */
    RationalFunction reciprocal_substituted() const
    {
        if (is_zero()) {
            return *this;
        }
        const int a = num_.degree();
        const int b = den_.degree();
        RationalFunction r;
        r.num_ = num_.reversed();
        r.den_ = den_.reversed();
        if (b > a) {
            r.num_ = r.num_.shifted_up(static_cast<std::size_t>(b - a));
        } else if (a > b) {
            r.den_ = r.den_.shifted_up(static_cast<std::size_t>(a - b));
        }
        r.normalize_content();
        return r;
    }

    std::string to_string() const;

private:
    static IntPolynomial quotient(const IntPolynomial& a, const IntPolynomial& g)
    {
        return g.is_one() ? a : divide_exact(a, g);
    }

    static RationalFunction add(const RationalFunction& a, const RationalFunction& b, bool subtract)
    {
        if (b.is_zero()) {
            return a;
        }
        if (a.is_zero()) {
            return subtract ? -b : b;
        }
        RationalFunction r;
        if (a.den_ == b.den_) {
            r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            if (a.den_.is_one()) {
                return r;
            }
            r.den_ = a.den_;
            r.reduce_against(a.den_);
            return r;
        }
        if (a.den_.is_constant() && b.den_.is_constant()) {
            const Integer& da = a.den_.leading();
            const Integer& db = b.den_.leading();
            r.num_ = subtract ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
            r.den_ = IntPolynomial{da * db};
            r.normalize_content();
            return r;
        }
        const IntPolynomial g = primitive_gcd(a.den_, b.den_);
        const IntPolynomial ad = quotient(a.den_, g);
        const IntPolynomial bd = quotient(b.den_, g);
        r.num_ = subtract ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
        r.den_ = ad * b.den_;
        if (!g.is_one()) {
            r.reduce_against(g);
        } else {
            r.normalize_content();
        }
        return r;
    }

    // Cancel gcd(num, g) where g divides the denominator and is the only
    // possible source of common factors.
    void reduce_against(const IntPolynomial& g)
    {
        if (num_.is_zero()) {
            den_ = IntPolynomial{Integer(1)};
            return;
        }
        const IntPolynomial h = primitive_gcd(num_, g);
        if (!h.is_one()) {
            num_ = divide_exact(num_, h);
            den_ = divide_exact(den_, h);
        }
        normalize_content();
    }

    void canonicalize()
    {
        if (den_.is_zero()) {
            throw std::domain_error("rational function with zero denominator");
        }
        if (num_.is_zero()) {
            den_ = IntPolynomial{Integer(1)};
            return;
        }
        const IntPolynomial g = primitive_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        normalize_content();
    }

    void normalize_content()
    {
        if (num_.is_zero()) {
            den_ = IntPolynomial{Integer(1)};
            return;
        }
        Integer c = content(den_);
        if (c != 1) {
            Integer cn = content(num_);
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
        }
        if (den_.leading() < 0) {
            c = -c;
        }
        if (c != 1) {
            std::vector<Integer> n = num_.coefficients();
            std::vector<Integer> d = den_.coefficients();
            for (auto& x : n) {
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            }
            for (auto& x : d) {
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            }
            num_ = IntPolynomial(std::move(n));
            den_ = IntPolynomial(std::move(d));
        }
    }

    IntPolynomial num_;
    IntPolynomial den_;
};

inline RationalFunction reciprocal_substitute(const RationalFunction& f) { return f.reciprocal_substituted(); }

/// f(p) == f(1/p).
inline bool is_symmetric(const RationalFunction& f) { return f == f.reciprocal_substituted(); }

/// Limit of a rational function as p grows without bound.
struct LargePLimit {
    enum class Kind { finite, plus_infinity, minus_infinity };
    Kind kind = Kind::finite;
    Rational value = 0;

    bool is_finite() const { return kind == Kind::finite; }
    friend bool operator==(const LargePLimit& a, const LargePLimit& b)
    {
        return a.kind == b.kind && (a.kind != Kind::finite || a.value == b.value);
    }
};

inline LargePLimit large_p_limit(const RationalFunction& f)
{
    LargePLimit r;
    if (f.is_zero()) {
        return r;
    }
    const int a = f.numerator().degree();
    const int b = f.denominator().degree();
    if (a < b) {
        return r;
    }
    if (a == b) {
        r.value = Rational(f.numerator().leading(), f.denominator().leading());
        r.value.canonicalize();
        return r;
    }
    r.kind = f.numerator().leading() > 0 ? LargePLimit::Kind::plus_infinity : LargePLimit::Kind::minus_infinity;
    return r;
}

/// E(E-1)...(E-k+1)/k!.
inline RationalFunction symbolic_binomial(const RationalFunction& e, unsigned k)
{
    RationalFunction r(1L);
    Integer factorial = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= e - RationalFunction(static_cast<long>(i));
        factorial *= i + 1;
    }
    return r * RationalFunction(Rational(Integer(1), factorial));
}

// ---------------------------------------------------------------------------
// Text and JSON forms.
// ---------------------------------------------------------------------------

/// "3p^2 - p + 1"; descending powers, integer coefficients.
inline std::string format_polynomial(const IntPolynomial& f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = f.coefficients();
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) {
            continue;
        }
        const bool negative = c[k] < 0;
        Integer mag = abs(c[k]);
        if (first) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (k == 0 || mag != 1) {
            out += mag.get_str();
        }
        if (k >= 1) {
            out += "p";
        }
        if (k >= 2) {
            out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::string RationalFunction::to_string() const
{
    if (den_.is_one()) {
        return format_polynomial(num_);
    }
    auto operand = [](const IntPolynomial& g) {
        const auto& c = g.coefficients();
        const auto terms = std::count_if(c.begin(), c.end(), [](const Integer& x) { return x != 0; });
        return terms > 1 ? "(" + format_polynomial(g) + ")" : format_polynomial(g);
    };
    return operand(num_) + "/" + operand(den_);
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

namespace detail {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view s) : s_(s) {}

    RationalFunction parse_expression()
    {
        IntPolynomial num = parse_operand();
        IntPolynomial den{Integer(1)};
        skip_space();
        if (peek() == '/') {
            ++pos_;
            den = parse_operand();
        }
        skip_space();
        if (pos_ != s_.size()) {
            fail("trailing characters");
        }
        if (den.is_zero()) {
            fail("zero denominator");
        }
        return RationalFunction(std::move(num), std::move(den));
    }

private:
    IntPolynomial parse_operand()
    {
        skip_space();
        if (peek() == '(') {
            ++pos_;
            IntPolynomial f = parse_polynomial();
            skip_space();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return f;
        }
        return parse_polynomial();
    }

    IntPolynomial parse_polynomial()
    {
        IntPolynomial acc;
        bool first = true;
        for (;;) {
            skip_space();
            int sign = 1;
            const char c = peek();
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                break;
            }
            acc += parse_term(sign);
            first = false;
            skip_space();
            if (peek() != '+' && peek() != '-') {
                break;
            }
        }
        return acc;
    }

    IntPolynomial parse_term(int sign)
    {
        Integer coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Integer(read_digits());
            have_coeff = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
            }
        }
        std::size_t power = 0;
        if (peek() == 'p') {
            ++pos_;
            power = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                power = std::stoul(read_digits());
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or p");
        }
        return IntPolynomial::monomial(sign < 0 ? Integer(-coeff) : coeff, power);
    }

    std::string read_digits()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("cannot parse rational function '" + std::string(s_) + "' at offset "
                                    + std::to_string(pos_) + ": " + what);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Inverse of RationalFunction::to_string.
inline RationalFunction parse_rational_function(std::string_view text)
{
    return detail::PolynomialParser(text).parse_expression();
}

/// {"num": [...], "den": [...]}, coefficients as decimal strings, lowest power first.
inline nlohmann::json to_json(const RationalFunction& f)
{
    auto coeffs = [](const IntPolynomial& g) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : g.coefficients()) {
            a.push_back(c.get_str());
        }
        return a;
    };
    return {{"num", coeffs(f.numerator())}, {"den", coeffs(f.denominator())}};
}

inline RationalFunction rational_function_from_json(const nlohmann::json& j)
{
    auto coeffs = [](const nlohmann::json& a) {
        std::vector<Integer> c;
        for (const auto& x : a) {
            c.emplace_back(x.is_string() ? x.get<std::string>() : x.dump());
        }
        return IntPolynomial(std::move(c));
    };
    return RationalFunction(coeffs(j.at("num")), coeffs(j.at("den")));
}

} // namespace padicroots

#endif // PADICROOTS_RATIONAL_FUNCTION_HPP
