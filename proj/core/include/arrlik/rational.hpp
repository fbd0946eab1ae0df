#pragma once

#include <gmpxx.h>

#include <string>

namespace arrlik {

// Exact arbitrary-precision arithmetic. All polynomial coefficients are
// rationals; integer content / gcd work happens on Integer.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// "3", "-1/2"
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace arrlik
