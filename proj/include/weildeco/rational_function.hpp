#pragma once

#include "weildeco/polynomial.hpp"

#include <optional>
#include <string>

namespace weildeco {

// Fraction of polynomials, lazily normalized: common monomial content is
// cancelled and the denominator is made monic under the canonical term
// order, but no multivariate gcd is ever computed. Equality is decided by
// cross-multiplication.
class RatFunc {
 public:
  RatFunc() : num_(Polynomial()), den_(Polynomial(1)) {}
  RatFunc(long c) : num_(Polynomial(c)), den_(Polynomial(1)) {}
  RatFunc(const Rational& c) : num_(Polynomial(c)), den_(Polynomial(1)) {}
  RatFunc(Polynomial num) : num_(std::move(num)), den_(Polynomial(1).promoted(num_.ring())) {
    normalize();
  }
  RatFunc(Polynomial num, Polynomial den);

  static RatFunc monomialPower(const Ring& ring, const Exponents& m);  // x^m, m may be negative

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  Ring ring() const { return unifyRings(num_.ring(), den_.ring()); }

  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_.isConstant(); }
  bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
  Rational constantValue() const { return num_.constantValue() / den_.constantValue(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc pow(int e) const;

  // Mathematical equality via cross-multiplication.
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  struct LaurentParts {
    Exponents alpha;  // f = x^alpha * a / b
    Polynomial a, b;  // neither divisible by any variable
  };
  LaurentParts laurentSplit() const;  // throws ZeroInput on f = 0

  // Exact polynomial quotient num/den when it exists.
  std::optional<Polynomial> asPolynomial() const;

  std::string str() const;

 private:
  Polynomial num_, den_;

  void normalize();
};

inline bool ratfuncEq(const RatFunc& f, const RatFunc& g) { return f == g; }

// Homogeneity of both parts (Cox-side graded fractions).
bool isGraded(const RatFunc& f);
// deg(num) - deg(den); requires both parts homogeneous, f != 0.
int gradedDegree(const RatFunc& f);

}  // namespace weildeco

namespace Eigen {

template <>
struct NumTraits<weildeco::RatFunc> {
  using Self = weildeco::RatFunc;
  using Real = Self;
  using NonInteger = Self;
  using Literal = Self;
  using Nested = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 20,
  };
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
