#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace weildeco {

// Exact coefficient field: arbitrary-precision rationals, kept in canonical
// form (reduced, positive denominator) by the backend.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator(const Rational& q) { return Integer(boost::multiprecision::numerator(q)); }
inline Integer denominator(const Rational& q) { return Integer(boost::multiprecision::denominator(q)); }

inline Rational rationalPow(const Rational& base, long e) {
  Rational r = 1;
  Rational b = base;
  long n = e;
  if (n < 0) {
    b = Rational(1) / base;
    n = -n;
  }
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline std::string toString(const Rational& q) { return q.str(); }

}  // namespace weildeco
