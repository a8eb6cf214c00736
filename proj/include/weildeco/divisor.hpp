#pragma once

#include "weildeco/fan.hpp"
#include "weildeco/rational_function.hpp"

#include <map>
#include <string>
#include <vector>

namespace weildeco {

// Value in Z u {+inf}; +inf is the order of the zero function.
struct OrdValue {
  bool infinite = false;
  long v = 0;

  static OrdValue inf() { return OrdValue{true, 0}; }
  static OrdValue fin(long k) { return OrdValue{false, k}; }

  bool isFinite() const { return !infinite; }
  long value() const {
    if (infinite) fail("KindMismatch", "infinite coefficient has no integer value");
    return v;
  }

  friend OrdValue operator+(OrdValue a, long k) { return a.infinite ? a : fin(a.v + k); }
  friend OrdValue operator+(OrdValue a, OrdValue b) {
    return (a.infinite || b.infinite) ? inf() : fin(a.v + b.v);
  }
  // difference for dual bounds; finite - infinite is undefined
  friend OrdValue operator-(OrdValue a, OrdValue b) {
    if (b.infinite) fail("KindMismatch", "cannot subtract an infinite coefficient");
    return a.infinite ? inf() : fin(a.v - b.v);
  }
  friend bool operator==(OrdValue a, OrdValue b) {
    return a.infinite == b.infinite && (a.infinite || a.v == b.v);
  }
  friend bool operator!=(OrdValue a, OrdValue b) { return !(a == b); }
  friend bool operator<(OrdValue a, OrdValue b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.v < b.v;
  }
  friend bool operator<=(OrdValue a, OrdValue b) { return a < b || a == b; }
  friend bool operator>(OrdValue a, OrdValue b) { return b < a; }
  friend bool operator>=(OrdValue a, OrdValue b) { return b <= a; }

  std::string str() const { return infinite ? "inf" : std::to_string(v); }
};

inline OrdValue ordMin(OrdValue a, OrdValue b) { return a < b ? a : b; }
inline OrdValue ordMax(OrdValue a, OrdValue b) { return a < b ? b : a; }

// A prime divisor: either a toric divisor D_rho, or an irreducible torus
// hypersurface cut out by a polynomial in affine or homogeneous coordinates.
// Irreducibility of the hypersurface polynomial is asserted by the caller,
// not verified (factorization is out of scope); the order of vanishing is
// still well-defined as the multiplicity of the stored polynomial.
class PrimeDivisor {
 public:
  enum class Kind : unsigned char { toric, affineHyp, projHyp };

  static PrimeDivisor toric(int rayId);
  static PrimeDivisor affineHypersurface(const Polynomial& p);
  static PrimeDivisor projectiveHypersurface(const Polynomial& p);

  Kind kind() const { return kind_; }
  bool isToric() const { return kind_ == Kind::toric; }
  int rayId() const { return ray_; }
  const Polynomial& poly() const { return poly_; }

  std::string str(const Fan* fan = nullptr) const;

  friend bool operator==(const PrimeDivisor& a, const PrimeDivisor& b);
  friend bool operator<(const PrimeDivisor& a, const PrimeDivisor& b);

 private:
  Kind kind_ = Kind::toric;
  int ray_ = -1;
  Polynomial poly_;
};

// Finitely supported integer combination of prime divisors.
class WeilDivisor {
 public:
  WeilDivisor() = default;
  static WeilDivisor single(const PrimeDivisor& p, long c = 1);

  long coefficient(const PrimeDivisor& p) const;
  void set(const PrimeDivisor& p, long c);
  const std::map<PrimeDivisor, long>& coefficients() const { return c_; }
  bool isZero() const { return c_.empty(); }

  WeilDivisor operator-() const;
  WeilDivisor& operator+=(const WeilDivisor& rhs);
  WeilDivisor& operator-=(const WeilDivisor& rhs);
  friend WeilDivisor operator+(WeilDivisor a, const WeilDivisor& b) { return a += b; }
  friend WeilDivisor operator-(WeilDivisor a, const WeilDivisor& b) { return a -= b; }
  WeilDivisor scaled(long k) const;
  friend bool operator==(const WeilDivisor& a, const WeilDivisor& b) { return a.c_ == b.c_; }

  std::string str(const Fan* fan = nullptr) const;

 private:
  std::map<PrimeDivisor, long> c_;
};

enum class LatticeMode { meet, join };
WeilDivisor meetJoin(const WeilDivisor& a, const WeilDivisor& b, LatticeMode mode);
inline WeilDivisor meet(const WeilDivisor& a, const WeilDivisor& b) {
  return meetJoin(a, b, LatticeMode::meet);
}
inline WeilDivisor join(const WeilDivisor& a, const WeilDivisor& b) {
  return meetJoin(a, b, LatticeMode::join);
}

// div(x^m) = sum <m, rho> D_rho over the toric prime divisors.
WeilDivisor characterDivisor(const Fan& fan, const Eigen::VectorXi& m);
// Sum of all toric prime divisors (the anti-canonical boundary).
WeilDivisor boundaryDivisor(const Fan& fan);

// Order of vanishing of f along P. For toric primes on torus-coordinate
// input this is the minimum of <m, rho> over stored monomials (numerator
// minus denominator); distinct characters restrict to distinct functions on
// the divisor torus, so the minimal-pairing terms cannot cancel and the
// minimum is exact. Hypersurface primes use repeated exact division.
OrdValue ordAt(const RatFunc& f, const PrimeDivisor& p, const Fan& fan);

// sum_{P in support} ord_P(f) * P; the caller picks the support.
WeilDivisor principalDivisorOnSupport(const RatFunc& f, const std::vector<PrimeDivisor>& support,
                                      const Fan& fan);

// Whether f/g and h have the same value in the residue field at P, decided
// by orders alone: ord(f) = ord(g) finite and ord(f - h g) > ord(g).
// Requires ord_P(h) = 0 (HNotUnit otherwise).
bool ratioResidueMatches(const RatFunc& f, const RatFunc& g, const RatFunc& h,
                         const PrimeDivisor& p, const Fan& fan);

}  // namespace weildeco
