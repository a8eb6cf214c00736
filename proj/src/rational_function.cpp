#include "weildeco/rational_function.hpp"

namespace weildeco {

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) fail("DivisionByZero", "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const Ring r = unifyRings(num_.ring(), den_.ring());
  num_ = num_.promoted(r);
  den_ = den_.promoted(r);
  if (num_.isZero()) {
    den_ = Polynomial::constant(r, 1);
    return;
  }
  if (!r.isScalar()) {
    const Exponents common = expMin(num_.contentExponents(), den_.contentExponents());
    if ((common.array() != 0).any()) {
      num_ = num_.divideByMonomial(common);
      den_ = den_.divideByMonomial(common);
    }
  }
  const Rational lead = den_.leadingTerm().c;
  if (lead != 1) {
    den_ = den_.scaled(Rational(1) / lead);
    num_ = num_.scaled(Rational(1) / lead);
  }
}

RatFunc RatFunc::monomialPower(const Ring& ring, const Exponents& m) {
  Exponents pos = m.cwiseMax(0);
  Exponents neg = (-m).cwiseMax(0);
  return RatFunc(Polynomial::monomial(ring, pos), Polynomial::monomial(ring, neg));
}

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.num_ = -f.num_;
  return f;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.isZero()) fail("DivisionByZero", "division by zero rational function");
  *this = RatFunc(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) {
    if (isZero()) fail("DivisionByZero", "negative power of zero");
    return RatFunc(den_, num_).pow(-e);
  }
  return RatFunc(num_.pow(e), den_.pow(e));
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc::LaurentParts RatFunc::laurentSplit() const {
  if (isZero()) fail("ZeroInput", "laurent split of zero");
  const Ring r = ring();
  if (r.isScalar()) return LaurentParts{Exponents::Zero(0), num_, den_};
  const Exponents cn = num_.contentExponents();
  const Exponents cd = den_.contentExponents();
  LaurentParts parts;
  parts.alpha = cn - cd;
  parts.a = num_.divideByMonomial(cn);
  parts.b = den_.divideByMonomial(cd);
  return parts;
}

std::optional<Polynomial> RatFunc::asPolynomial() const {
  if (isZero()) return Polynomial::zero(ring());
  if (isPolynomial()) return num_.scaled(Rational(1) / den_.constantValue());
  Polynomial q;
  if (tryExactDivide(num_, den_, q)) return q;
  return std::nullopt;
}

std::string RatFunc::str() const {
  if (isPolynomial()) {
    const Rational d = den_.constantValue();
    return d == 1 ? num_.str() : num_.scaled(Rational(1) / d).str();
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool isGraded(const RatFunc& f) { return f.num().isHomogeneous() && f.den().isHomogeneous(); }

int gradedDegree(const RatFunc& f) {
  if (f.isZero()) fail("ZeroInput", "graded degree of zero");
  if (!isGraded(f))
    fail("InhomogeneousProjectiveInput", "numerator or denominator is not homogeneous");
  return f.num().totalDegree() - f.den().totalDegree();
}

}  // namespace weildeco
