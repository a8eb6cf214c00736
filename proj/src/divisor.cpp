#include "weildeco/divisor.hpp"

#include <sstream>

namespace weildeco {

namespace {

Polynomial normalizeHypersurface(const Polynomial& p, Coords coords) {
  if (p.isConstant()) fail("ZeroInput", "hypersurface polynomial must be nonconstant");
  const Ring r = p.ring();
  if (r.coords != coords) fail("CoordinateMismatch", "hypersurface polynomial in wrong coordinates");
  for (int i = 0; i < r.vars; ++i)
    if (p.divisibleByVariable(i))
      fail("CoordinateMismatch",
           "hypersurface polynomial divisible by a coordinate; use the toric variant");
  return p.primitivePart();  // unit content, positive leading coefficient
}

int comparePolys(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!expEquals(ta[i].e, tb[i].e)) return grevlexLess(ta[i].e, tb[i].e) ? -1 : 1;
    if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c ? -1 : 1;
  }
  return 0;
}

}  // namespace

PrimeDivisor PrimeDivisor::toric(int rayId) {
  PrimeDivisor p;
  p.kind_ = Kind::toric;
  p.ray_ = rayId;
  return p;
}

PrimeDivisor PrimeDivisor::affineHypersurface(const Polynomial& poly) {
  PrimeDivisor p;
  p.kind_ = Kind::affineHyp;
  p.poly_ = normalizeHypersurface(poly, Coords::affine);
  return p;
}

PrimeDivisor PrimeDivisor::projectiveHypersurface(const Polynomial& poly) {
  PrimeDivisor p;
  p.kind_ = Kind::projHyp;
  p.poly_ = normalizeHypersurface(poly, Coords::cox);
  if (!p.poly_.isHomogeneous())
    fail("InhomogeneousProjectiveInput", "projective hypersurface must be homogeneous");
  return p;
}

std::string PrimeDivisor::str(const Fan* fan) const {
  switch (kind_) {
    case Kind::toric:
      return fan ? fan->divisorName(ray_) : "D" + std::to_string(ray_);
    case Kind::affineHyp:
    case Kind::projHyp:
      return "V(" + poly_.str() + ")";
  }
  return "?";
}

bool operator==(const PrimeDivisor& a, const PrimeDivisor& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == PrimeDivisor::Kind::toric) return a.ray_ == b.ray_;
  return comparePolys(a.poly_, b.poly_) == 0;
}

bool operator<(const PrimeDivisor& a, const PrimeDivisor& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  if (a.kind_ == PrimeDivisor::Kind::toric) return a.ray_ < b.ray_;
  return comparePolys(a.poly_, b.poly_) < 0;
}

WeilDivisor WeilDivisor::single(const PrimeDivisor& p, long c) {
  WeilDivisor d;
  d.set(p, c);
  return d;
}

long WeilDivisor::coefficient(const PrimeDivisor& p) const {
  auto it = c_.find(p);
  return it == c_.end() ? 0 : it->second;
}

void WeilDivisor::set(const PrimeDivisor& p, long c) {
  if (c == 0)
    c_.erase(p);
  else
    c_[p] = c;
}

WeilDivisor WeilDivisor::operator-() const {
  WeilDivisor d;
  for (const auto& [p, c] : c_) d.c_[p] = -c;
  return d;
}

WeilDivisor& WeilDivisor::operator+=(const WeilDivisor& rhs) {
  for (const auto& [p, c] : rhs.c_) set(p, coefficient(p) + c);
  return *this;
}

WeilDivisor& WeilDivisor::operator-=(const WeilDivisor& rhs) { return *this += -rhs; }

WeilDivisor WeilDivisor::scaled(long k) const {
  WeilDivisor d;
  if (k != 0)
    for (const auto& [p, c] : c_) d.c_[p] = k * c;
  return d;
}

std::string WeilDivisor::str(const Fan* fan) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : c_) {
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const long a = c < 0 ? -c : c;
    if (a != 1) out << a << "*";
    out << p.str(fan);
  }
  return out.str();
}

WeilDivisor meetJoin(const WeilDivisor& a, const WeilDivisor& b, LatticeMode mode) {
  WeilDivisor out;
  auto pick = [mode](long x, long y) { return mode == LatticeMode::meet ? std::min(x, y) : std::max(x, y); };
  for (const auto& [p, c] : a.coefficients()) out.set(p, pick(c, b.coefficient(p)));
  for (const auto& [p, c] : b.coefficients())
    if (a.coefficient(p) == 0) out.set(p, pick(0L, c));
  return out;
}

WeilDivisor characterDivisor(const Fan& fan, const Eigen::VectorXi& m) {
  if (m.size() != fan.dim) fail("DimensionMismatch", "character has wrong dimension");
  WeilDivisor d;
  for (const Ray& r : fan.rays) d.set(PrimeDivisor::toric(r.id), m.dot(r.v));
  return d;
}

WeilDivisor boundaryDivisor(const Fan& fan) {
  WeilDivisor d;
  for (const Ray& r : fan.rays) d.set(PrimeDivisor::toric(r.id), 1);
  return d;
}

namespace {

OrdValue toricOrdOfPoly(const Polynomial& f, const Eigen::VectorXi& ray) {
  if (f.isZero()) return OrdValue::inf();
  bool first = true;
  long best = 0;
  for (const auto& t : f.terms()) {
    const long v = t.e.dot(ray.cast<int>());
    if (first || v < best) best = v;
    first = false;
  }
  return OrdValue::fin(best);
}

OrdValue coxOrdOfPoly(const Polynomial& f, int slot) {
  if (f.isZero()) return OrdValue::inf();
  bool first = true;
  long best = 0;
  for (const auto& t : f.terms()) {
    const long v = t.e[slot];
    if (first || v < best) best = v;
    first = false;
  }
  return OrdValue::fin(best);
}

}  // namespace

OrdValue ordAt(const RatFunc& f, const PrimeDivisor& p, const Fan& fan) {
  if (f.isZero()) return OrdValue::inf();
  const Ring r = f.ring();
  const bool torusCoords = r.isScalar() || r.vars == fan.dim;
  const bool coxCoords =
      !r.isScalar() && fan.isProjectiveSpace() && r.coords == Coords::cox && r.vars == fan.dim + 1;
  if (!torusCoords && !coxCoords)
    fail("CoordinateMismatch", "function is written in coordinates not matching the fan");

  switch (p.kind()) {
    case PrimeDivisor::Kind::toric: {
      const Ray& ray = fan.ray(p.rayId());
      if (r.isScalar()) return OrdValue::fin(0);
      if (torusCoords)
        return toricOrdOfPoly(f.num(), ray.v) - toricOrdOfPoly(f.den(), ray.v);
      const int slot = fan.varSlot(p.rayId());
      return coxOrdOfPoly(f.num(), slot) - coxOrdOfPoly(f.den(), slot);
    }
    case PrimeDivisor::Kind::affineHyp: {
      if (!torusCoords)
        fail("CoordinateMismatch", "affine hypersurface needs torus-coordinate input");
      if (r.isScalar()) return OrdValue::fin(0);
      const Polynomial q = p.poly().promoted(r);
      return OrdValue::fin(multiplicity(f.num(), q) - multiplicity(f.den(), q));
    }
    case PrimeDivisor::Kind::projHyp: {
      if (r.isScalar()) return OrdValue::fin(0);
      if (!coxCoords)
        fail("CoordinateMismatch", "projective hypersurface needs homogeneous input");
      const Polynomial q = p.poly().promoted(r);
      return OrdValue::fin(multiplicity(f.num(), q) - multiplicity(f.den(), q));
    }
  }
  fail("KindMismatch", "unknown prime divisor kind");
}

WeilDivisor principalDivisorOnSupport(const RatFunc& f, const std::vector<PrimeDivisor>& support,
                                      const Fan& fan) {
  if (f.isZero()) fail("ZeroFunction", "div(0) is not a divisor");
  WeilDivisor d;
  for (const PrimeDivisor& p : support) d.set(p, ordAt(f, p, fan).value());
  return d;
}

bool ratioResidueMatches(const RatFunc& f, const RatFunc& g, const RatFunc& h,
                         const PrimeDivisor& p, const Fan& fan) {
  const OrdValue oh = ordAt(h, p, fan);
  if (!(oh == OrdValue::fin(0)))
    fail("HNotUnit", "comparison function must be a unit at the prime (ord = " + oh.str() + ")");
  const OrdValue of = ordAt(f, p, fan);
  const OrdValue og = ordAt(g, p, fan);
  if (of != og || !of.isFinite()) return false;
  return ordAt(f - h * g, p, fan) > og;
}

}  // namespace weildeco
