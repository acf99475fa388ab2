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

#ifndef PADICROOTS_PADIC_HPP
#define PADICROOTS_PADIC_HPP

#include "padicroots/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace padicroots {

/// Which distribution a sample is drawn from.
/**
 * general: all n+1 coefficients Haar-uniform in Z_p.
 * monic: leading coefficient 1, the rest uniform.
 * monic_xn: leading coefficient 1, the rest uniform in pZ_p (reduces to x^n mod p).
 */
enum class SamplingMode { general, monic, monic_xn };

inline std::string_view mode_name(SamplingMode m)
{
    switch (m) {
    case SamplingMode::general: return "general";
    case SamplingMode::monic: return "monic";
    case SamplingMode::monic_xn: return "monic_xn";
    }
    return "?";
}

inline std::optional<SamplingMode> parse_mode(std::string_view s)
{
    for (SamplingMode m : {SamplingMode::general, SamplingMode::monic, SamplingMode::monic_xn}) {
        if (mode_name(m) == s) {
            return m;
        }
    }
    return std::nullopt;
}

inline bool is_prime(long p)
{
    if (p < 2) {
        return false;
    }
    for (long q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
}

inline Integer power_of(long p, int k)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

/// A polynomial over Z_p known modulo p^K.
struct PadicSample {
    long p = 2;
    int K = 1;
    /// coeffs[i] multiplies x^i; each in [0, p^K).
    std::vector<Integer> coeffs;
    SamplingMode mode = SamplingMode::general;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Reduces arbitrary integers mod p^K.
    static PadicSample from_integers(long p, int K, std::vector<Integer> coeffs,
                                     SamplingMode mode = SamplingMode::general)
    {
        if (!is_prime(p) || K < 1 || coeffs.empty()) {
            throw std::invalid_argument("sample needs a prime p, K >= 1 and at least one coefficient");
        }
        const Integer m = power_of(p, K);
        for (auto& c : coeffs) {
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        }
        PadicSample s{p, K, std::move(coeffs), mode};
        s.validate();
        return s;
    }

    void validate() const
    {
        const Integer m = power_of(p, K);
        for (const auto& c : coeffs) {
            if (c < 0 || c >= m) {
                throw std::invalid_argument("sample coefficient not reduced mod p^K");
            }
        }
        if (mode != SamplingMode::general && coeffs.back() != 1) {
            throw std::invalid_argument("monic sample must have leading coefficient 1");
        }
        if (mode == SamplingMode::monic_xn) {
            for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
                if (mpz_divisible_ui_p(coeffs[i].get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
                    throw std::invalid_argument("monic_xn sample must have lower coefficients divisible by p");
                }
            }
        }
    }
};

/// Distinct-root count valid for every Z_p lift of the sample, when determined.
struct RootCountResult {
    std::optional<int> count;
    /// Deepest number of p-adic digits the descent read.
    int precision_consumed = 0;

    bool determined() const { return count.has_value(); }
};

namespace detail {

// Hensel descent on a polynomial known modulo p^K. Precision is tracked
// uniformly across coefficients, which is conservative: a branch is declared
// undetermined as soon as some coefficient might still be ambiguous.
class Descent {
public:
    explicit Descent(long p) : p_(p) {}

    int consumed() const { return consumed_; }

    std::optional<int> count(std::vector<Integer> f, int K, bool zero_residue_only, int used)
    {
        int v = K;
        for (const auto& c : f) {
            if (c != 0) {
                v = std::min(v, valuation(c, K));
            }
        }
        if (v >= K) {
            note(used + K);
            return std::nullopt;
        }
        if (v > 0) {
            const Integer& pv = power(v);
            for (auto& c : f) {
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pv.get_mpz_t());
            }
            K -= v;
            used += v;
        }
        note(used + 1);

        const auto up = static_cast<unsigned long>(p_);
        std::vector<std::int64_t> bar(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            bar[i] = static_cast<std::int64_t>(mpz_fdiv_ui(f[i].get_mpz_t(), up));
        }
        int total = 0;
        const std::int64_t last = zero_residue_only ? 0 : p_ - 1;
        for (std::int64_t r = 0; r <= last; ++r) {
            if (eval_mod(bar, r, false) != 0) {
                continue;
            }
            if (eval_mod(bar, r, true) != 0) {
                ++total;
                continue;
            }
            auto sub = count(shift(f, r, K), K, false, used);
            if (!sub) {
                return std::nullopt;
            }
            total += *sub;
        }
        return total;
    }

private:
    const Integer& power(int k)
    {
        while (static_cast<int>(powers_.size()) <= k) {
            powers_.push_back(powers_.empty() ? Integer(1) : powers_.back() * p_);
        }
        return powers_[static_cast<std::size_t>(k)];
    }

    int valuation(const Integer& c, int cap)
    {
        int v = 0;
        while (v < cap && mpz_divisible_p(c.get_mpz_t(), power(v + 1).get_mpz_t()) != 0) {
            ++v;
        }
        return v;
    }

    // f(r) or f'(r) modulo p.
    std::int64_t eval_mod(const std::vector<std::int64_t>& f, std::int64_t r, bool derivative) const
    {
        std::int64_t acc = 0;
        for (std::size_t i = f.size(); i-- > (derivative ? 1U : 0U);) {
            const std::int64_t c = derivative ? (f[i] * static_cast<std::int64_t>(i % static_cast<std::size_t>(p_))) % p_ : f[i];
            acc = (acc * r + c) % p_;
        }
        return acc;
    }

    // Coefficients of f(r + p y) reduced mod p^K.
    std::vector<Integer> shift(std::vector<Integer> f, std::int64_t r, int K)
    {
        const std::size_t n = f.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = n - 1; j-- > i;) {
                f[j] += f[j + 1] * static_cast<long>(r);
            }
        }
        const Integer& m = power(K);
        for (std::size_t j = 0; j < n; ++j) {
            if (static_cast<int>(j) >= K) {
                f[j] = 0;
                continue;
            }
            f[j] *= power(static_cast<int>(j));
            mpz_fdiv_r(f[j].get_mpz_t(), f[j].get_mpz_t(), m.get_mpz_t());
        }
        return f;
    }

    void note(int used) { consumed_ = std::max(consumed_, used); }

    long p_;
    std::vector<Integer> powers_;
    int consumed_ = 0;
};

} // namespace detail

/// Number of distinct roots in Z_p, by recursive Hensel descent.
/**
 * A root of the reduction with nonzero derivative lifts to exactly one root.
 * A multiple root r is examined through f(r + py) with its p-content removed.
 * Undetermined when the known digits run out before every branch resolves.
 */
inline RootCountResult count_zp_roots(const PadicSample& f)
{
    detail::Descent descent(f.p);
    auto c = descent.count(f.coeffs, f.K, false, 0);
    return {c, descent.consumed()};
}

/// Roots in Q_p: roots in Z_p plus roots of x^n f(1/x) lying in pZ_p.
/**
 * When the leading coefficient vanishes modulo p^K, a simple root of the
 * reversal at 0 is counted; that is exact for every lift except the
 * measure-zero one whose leading coefficient is exactly 0.
 */
inline RootCountResult count_qp_roots(const PadicSample& f)
{
    detail::Descent descent(f.p);
    auto integral = descent.count(f.coeffs, f.K, false, 0);
    std::optional<int> outer;
    if (integral) {
        std::vector<Integer> rev(f.coeffs.rbegin(), f.coeffs.rend());
        outer = descent.count(std::move(rev), f.K, true, 0);
    }
    if (!integral || !outer) {
        return {std::nullopt, descent.consumed()};
    }
    return {*integral + *outer, descent.consumed()};
}

/// The count matching the sample's distribution: Q_p roots for general, Z_p roots for monic modes.
inline RootCountResult count_roots(const PadicSample& f)
{
    return f.mode == SamplingMode::general ? count_qp_roots(f) : count_zp_roots(f);
}

/// Distinct roots of an exact integer polynomial, in Z_p or in Q_p.
/**
 * Repeated factors are removed first (f / gcd(f, f') over Z[x]), so the
 * descent terminates; precision doubles from 8 digits until the count is
 * determined. Throws if the cap is reached, which cannot happen for a
 * squarefree input with a large enough cap.
 */
inline RootCountResult count_integer_polynomial_roots(const std::vector<Integer>& coeffs, long p, bool rational_roots,
                                                      int k_cap = 4096)
{
    // Polynomial<Integer> is used here with x, not p, as its indeterminate.
    const IntPolynomial f(coeffs);
    if (f.is_zero()) {
        throw std::invalid_argument("the zero polynomial has every point as a root");
    }
    std::vector<Integer> deriv;
    for (std::size_t i = 1; i < f.coefficients().size(); ++i) {
        deriv.push_back(f.coefficients()[i] * static_cast<unsigned long>(i));
    }
    const IntPolynomial g = primitive_gcd(f, IntPolynomial(std::move(deriv)));
    const IntPolynomial squarefree = divide_exact(primitive_part(f), g);
    for (int K = 8; K <= k_cap; K *= 2) {
        const PadicSample s = PadicSample::from_integers(p, K, squarefree.coefficients());
        RootCountResult r = rational_roots ? count_qp_roots(s) : count_zp_roots(s);
        if (r.count) {
            return r;
        }
    }
    throw std::runtime_error("root count still undetermined at the precision cap");
}

} // namespace padicroots

#endif // PADICROOTS_PADIC_HPP
