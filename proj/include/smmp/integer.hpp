#pragma once

#include <gmpxx.h>

#include <string>

namespace smmp {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Least non-negative residue of x modulo m (m > 0).
inline Integer mod_floor(const Integer& x, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Inverse of x modulo m in [0, m). Requires gcd(x, m) = 1; returns 0 when m = 1.
inline Integer mod_inverse(const Integer& x, const Integer& m) {
    if (m == 1) return 0;
    Integer r;
    mpz_invert(r.get_mpz_t(), mod_floor(x, m).get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Exact square root when x is a perfect square, otherwise -1.
inline Integer exact_sqrt(const Integer& x) {
    if (x < 0 || mpz_perfect_square_p(x.get_mpz_t()) == 0) return -1;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline bool divides(const Integer& d, const Integer& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace smmp
