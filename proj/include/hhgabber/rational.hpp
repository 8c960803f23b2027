#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hhgabber {

// Exact rational coefficients. mpq_class keeps the canonical form we rely on:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    if (den == 0)
        throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    mpz_class n(num), d(den);
    if (d == 0)
        throw std::invalid_argument("rational: zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace hhgabber
