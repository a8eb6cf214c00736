#pragma once

#include "weildeco/error.hpp"
#include "weildeco/rational.hpp"
#include "weildeco/ring.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace weildeco {

using Exponents = Eigen::VectorXi;

int totalDegree(const Exponents& e);
bool expEquals(const Exponents& a, const Exponents& b);
// Strict compare under graded reverse lexicographic order (variables in
// declared order); this is the canonical storage and printing order.
bool grevlexLess(const Exponents& a, const Exponents& b);
bool lexLess(const Exponents& a, const Exponents& b);
// a divides b, i.e. a <= b componentwise.
bool expDivides(const Exponents& a, const Exponents& b);
Exponents expMax(const Exponents& a, const Exponents& b);
Exponents expMin(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial over the rationals. Terms are stored with
// no zero coefficients, no duplicate exponent vectors, sorted grevlex
// descending (leading term first).
class Polynomial {
 public:
  struct Term {
    Exponents e;
    Rational c;
  };

  Polynomial() = default;  // zero in the scalar ring
  Polynomial(long c) : Polynomial(Rational(c)) {}
  explicit Polynomial(const Rational& c);

  static Polynomial zero(const Ring& ring);
  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, int i, int power = 1);
  static Polynomial monomial(const Ring& ring, const Exponents& e, const Rational& c = Rational(1));
  static Polynomial fromTerms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  bool isMonomial() const { return terms_.size() == 1; }
  Rational constantValue() const;  // requires isConstant()
  const Term& leadingTerm() const;  // grevlex leading, requires nonzero

  int totalDegree() const;  // -1 for zero
  bool isHomogeneous() const;
  bool dependsOn(int var) const;
  bool divisibleByVariable(int var) const;

  // Rewrites a scalar-ring constant in the given ring; identity otherwise.
  Polynomial promoted(const Ring& ring) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int e) const;  // e >= 0

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // f with x_{var} := 0 (0-based variable index).
  Polynomial substituteZero(int var) const;
  // Substitute x_{var} := 1 and delete that exponent slot; the result lives
  // in a ring with one variable fewer (chart dehomogenization).
  Polynomial substituteOneAndDrop(int var, const Ring& targetRing) const;

  Rational evaluateAt(const std::vector<Rational>& point) const;

  // Componentwise minimum of exponent vectors over all terms (nonzero input).
  Exponents contentExponents() const;
  // Positive rational c such that (1/c)*this has coprime integer
  // coefficients with positive leading coefficient.
  Rational content() const;
  Polynomial primitivePart() const;
  Polynomial divideByMonomial(const Exponents& e) const;

  std::string str() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;

  void normalize();  // sort + merge + drop zeros
};

// Exact quotient a/b; throws NotDivisible / DivisionByZero.
Polynomial exactDivide(const Polynomial& a, const Polynomial& b);
bool tryExactDivide(const Polynomial& a, const Polynomial& b, Polynomial& quotient);
// Largest k with p^k | f (f nonzero, p nonconstant).
int multiplicity(const Polynomial& f, const Polynomial& p);

}  // namespace weildeco
