// Shared helpers for the unit tests.
#ifndef PADICROOTS_TESTS_SUPPORT_HPP
#define PADICROOTS_TESTS_SUPPORT_HPP

#include "padicroots/rational_function.hpp"

#include <random>
#include <string_view>

namespace padicroots::testing {

inline RationalFunction rf(std::string_view s) { return parse_rational_function(s); }

inline RationalFunction P() { return RationalFunction::p(); }

inline RationalFunction ratio(long a, long b) { return RationalFunction(Rational(a, b)); }

inline RationalFunction pow(const RationalFunction& f, int k)
{
    RationalFunction r(1L);
    for (int i = 0; i < k; ++i) {
        r *= f;
    }
    return r;
}

// Random polynomial in p with small integer coefficients.
inline IntPolynomial random_polynomial(std::mt19937_64& rng, int max_degree, long bound = 5)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
        x = coef(rng);
    }
    return IntPolynomial(std::move(c));
}

inline RationalFunction random_rf(std::mt19937_64& rng, int max_degree = 3)
{
    IntPolynomial den;
    while (den.is_zero()) {
        den = random_polynomial(rng, max_degree);
    }
    return RationalFunction(random_polynomial(rng, max_degree), den);
}

} // namespace padicroots::testing

#endif
