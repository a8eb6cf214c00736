#include "weildeco/decoration.hpp"

#include <algorithm>
#include <sstream>

namespace weildeco {

Decoration Decoration::rankOne(const Fan& fan, WeilDivisor d) {
  Decoration out;
  out.fan_ = fan;
  out.v_ = RankOneDeco{std::move(d)};
  return out;
}

Decoration Decoration::directSum(const Fan& fan, std::vector<Decoration> parts) {
  Decoration out;
  out.fan_ = fan;
  out.v_ = DirectSumDeco{std::move(parts)};
  return out;
}

Decoration Decoration::phi(const Fan& fan,
                           std::vector<std::pair<PrimeDivisor, std::optional<RatFunc>>> units) {
  for (const auto& [p, h] : units)
    if (h && ordAt(*h, p, fan) != OrdValue::fin(0))
      fail("HNotUnit", "declared comparison function is not a unit at " + p.str(&fan));
  Decoration out;
  out.fan_ = fan;
  out.v_ = PhiDeco{std::move(units)};
  return out;
}

Decoration Decoration::omega(const Fan& fan) {
  Decoration out;
  out.fan_ = fan;
  out.v_ = OmegaDeco{false};
  return out;
}

Decoration Decoration::logOmega(const Fan& fan) {
  Decoration out;
  out.fan_ = fan;
  out.v_ = OmegaDeco{true};
  return out;
}

Decoration Decoration::tangent(const Fan& fan) {
  Decoration out;
  out.fan_ = fan;
  out.v_ = TangentDeco{};
  return out;
}

Decoration Decoration::lambda2tP4() {
  Decoration out;
  out.fan_ = builtinFan("projective(4)");
  out.v_ = Lambda2TDeco{};
  return out;
}

Decoration Decoration::hm(const UData& u) {
  const UValidation rep = validateU(u);
  if (!rep.ok) fail("InvalidU", rep.problems.front());
  Decoration out;
  out.fan_ = u.fan;
  out.v_ = HMDeco{u};
  return out;
}

int Decoration::rank() const {
  struct Visitor {
    const Decoration& self;
    int operator()(const RankOneDeco&) const { return 1; }
    int operator()(const DirectSumDeco& d) const {
      int r = 0;
      for (const Decoration& part : d.parts) r += part.rank();
      return r;
    }
    int operator()(const PhiDeco&) const { return 2; }
    int operator()(const OmegaDeco&) const { return self.fan().dim; }
    int operator()(const TangentDeco&) const { return self.fan().dim; }
    int operator()(const Lambda2TDeco&) const { return 6; }
    int operator()(const HMDeco&) const { return 2; }
  };
  return std::visit(Visitor{*this}, v_);
}

std::string Decoration::kindName() const {
  struct Visitor {
    std::string operator()(const RankOneDeco&) const { return "rank-one"; }
    std::string operator()(const DirectSumDeco&) const { return "direct-sum"; }
    std::string operator()(const PhiDeco&) const { return "phi"; }
    std::string operator()(const OmegaDeco& d) const { return d.log ? "log-omega" : "omega"; }
    std::string operator()(const TangentDeco&) const { return "tangent"; }
    std::string operator()(const Lambda2TDeco&) const { return "lambda2-tangent"; }
    std::string operator()(const HMDeco&) const { return "hm"; }
  };
  return std::visit(Visitor{}, v_);
}

Ring elemRing(const VectorElem& v) {
  Ring r = Ring::scalar();
  for (const RatFunc& f : v) r = unifyRings(r, f.ring());
  return r;
}

bool elemIsZero(const VectorElem& v) {
  for (const RatFunc& f : v)
    if (!f.isZero()) return false;
  return true;
}

VectorElem elemScale(const RatFunc& f, const VectorElem& v) {
  VectorElem out;
  out.reserve(v.size());
  for (const RatFunc& g : v) out.push_back(f * g);
  return out;
}

VectorElem elemAdd(const VectorElem& a, const VectorElem& b) {
  if (a.size() != b.size()) fail("DimensionMismatch", "element sizes differ");
  VectorElem out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

namespace {

// K-elements on a projective fan must be written as degree-zero fractions.
void requireFieldElement(const RatFunc& f, const char* what) {
  if (f.isZero()) return;
  const Ring r = f.ring();
  if (!r.isScalar() && r.coords == Coords::cox && gradedDegree(f) != 0)
    fail("InhomogeneousProjectiveInput",
         std::string(what) + " must be a degree-zero fraction in homogeneous coordinates");
}

void requireFieldElement(const VectorElem& v, const char* what) {
  for (const RatFunc& f : v) requireFieldElement(f, what);
}

RatFunc pairWithIntVector(const VectorElem& coords, const Eigen::VectorXi& w) {
  RatFunc sum;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (w[static_cast<int>(i)] != 0) sum += coords[i] * RatFunc(Rational(w[static_cast<int>(i)]));
  return sum;
}

int deltaAt(const PrimeDivisor& p, int rayId) {
  return p.isToric() && p.rayId() == rayId ? 1 : 0;
}

}  // namespace

OrdValue seminormPhi(const std::optional<RatFunc>& h, const PrimeDivisor& p, const RatFunc& f,
                     const RatFunc& g, const Fan& fan) {
  const OrdValue plain = ordMin(ordAt(f, p, fan), ordAt(g, p, fan));
  if (!h) return plain;
  if (ratioResidueMatches(f, g, *h, p, fan)) return plain + 1;
  return plain;
}

OrdValue omegaCoeff(const Fan& fan, const VectorElem& m, const PrimeDivisor& p, bool log) {
  if (static_cast<int>(m.size()) != fan.dim) fail("DimensionMismatch", "character length mismatch");
  const FanValidation fv = validateFan(fan);
  if (!fv.ok) fail("NotSmooth", fv.problems.front());
  requireFieldElement(m, "character coefficient");
  OrdValue best = OrdValue::inf();
  for (const Ray& r : fan.rays) {
    Eigen::VectorXi ray = r.v;
    RatFunc pairing;
    for (int i = 0; i < fan.dim; ++i)
      if (ray[i] != 0) pairing += m[static_cast<std::size_t>(i)] * RatFunc(Rational(ray[i]));
    OrdValue term = ordAt(pairing, p, fan) + (log ? 0 : -deltaAt(p, r.id));
    best = ordMin(best, term);
  }
  return best;
}

namespace {

std::vector<int> admissibleCones(const Fan& fan, const PrimeDivisor& p) {
  if (p.isToric()) return fan.conesContaining(p.rayId());
  std::vector<int> all;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) all.push_back(static_cast<int>(c));
  return all;
}

TangentWitness tangentAtCone(const Fan& fan, const VectorElem& a, const PrimeDivisor& p,
                             int cone) {
  TangentWitness w;
  w.cone = cone;
  w.value = OrdValue::inf();
  for (const DualCovector& dc : dualBasis(fan, cone)) {
    const OrdValue term = ordAt(pairWithIntVector(a, dc.m), p, fan) + deltaAt(p, dc.rayId);
    if (w.rayId < 0 || term < w.value) {
      w.rayId = dc.rayId;
      w.covector = dc.m;
      w.value = term;
    }
  }
  return w;
}

}  // namespace

TangentWitness tangentCoeffWitness(const Fan& fan, const VectorElem& a, const PrimeDivisor& p) {
  if (static_cast<int>(a.size()) != fan.dim) fail("DimensionMismatch", "covector length mismatch");
  requireFieldElement(a, "tangent coefficient");
  const std::vector<int> cones = admissibleCones(fan, p);
  if (cones.empty()) fail("NoContainingCone", "no maximal cone contains the prime divisor");
  return tangentAtCone(fan, a, p, cones.front());
}

OrdValue tangentCoeff(const Fan& fan, const VectorElem& a, const PrimeDivisor& p) {
  return tangentCoeffWitness(fan, a, p).value;
}

OrdValue tangentCoeffAtCone(const Fan& fan, const VectorElem& a, const PrimeDivisor& p,
                            int cone) {
  const std::vector<int> cones = admissibleCones(fan, p);
  if (std::find(cones.begin(), cones.end(), cone) == cones.end())
    fail("NoContainingCone", "the cone does not contain the prime divisor");
  return tangentAtCone(fan, a, p, cone).value;
}

std::vector<int> tangentAdmissibleCones(const Fan& fan, const PrimeDivisor& p) {
  return admissibleCones(fan, p);
}

std::vector<RatFunc> tangentCanonicalLift(const Fan& fan, const VectorElem& a, int cone) {
  if (static_cast<int>(a.size()) != fan.dim) fail("DimensionMismatch", "covector length mismatch");
  std::vector<RatFunc> lift(static_cast<std::size_t>(fan.rayCount()));
  for (const DualCovector& dc : dualBasis(fan, cone))
    lift[static_cast<std::size_t>(dc.rayId)] = pairWithIntVector(a, dc.m);
  return lift;
}

OrdValue tangentLiftBound(const Fan& fan, const VectorElem& a, const std::vector<RatFunc>& lift,
                          const PrimeDivisor& p) {
  if (static_cast<int>(lift.size()) != fan.rayCount())
    fail("DimensionMismatch", "one lift coordinate per ray required");
  // the lift must map to a under the ray surjection
  for (int i = 0; i < fan.dim; ++i) {
    RatFunc sum;
    for (const Ray& r : fan.rays)
      if (r.v[i] != 0) sum += lift[static_cast<std::size_t>(r.id)] * RatFunc(Rational(r.v[i]));
    if (!(sum == a[static_cast<std::size_t>(i)]))
      fail("NotALift", "lift does not map to the covector under the ray surjection");
  }
  OrdValue best = OrdValue::inf();
  for (const Ray& r : fan.rays)
    best = ordMin(best, ordAt(lift[static_cast<std::size_t>(r.id)], p, fan) + deltaAt(p, r.id));
  return best;
}

namespace {

// index of [ij] in the basis [12],[13],[14],[23],[24],[34]
int antisymIndex(int i, int j) {
  static const int table[5][5] = {{-1, -1, -1, -1, -1},
                                  {-1, -1, 0, 1, 2},
                                  {-1, 0, -1, 3, 4},
                                  {-1, 1, 3, -1, 5},
                                  {-1, 2, 4, 5, -1}};
  return table[i][j];
}

}  // namespace

OrdValue lambda2tCoeff(const Fan& p4, const VectorElem& w, const PrimeDivisor& p) {
  if (w.size() != 6) fail("DimensionMismatch", "six coefficients [12]..[34] required");
  if (!p4.isProjectiveSpace() || p4.dim != 4)
    fail("KindMismatch", "second exterior power decoration lives on P4");
  requireFieldElement(w, "coefficient");
  auto f = [&w](int i, int j) { return w[static_cast<std::size_t>(antisymIndex(i, j))]; };
  auto ord = [&](const RatFunc& g) { return ordAt(g, p, p4); };

  if (!p.isToric()) {
    OrdValue best = OrdValue::inf();
    for (const RatFunc& g : w) best = ordMin(best, ord(g));
    return best;
  }
  const int k = p4.varSlot(p.rayId());
  OrdValue best = OrdValue::inf();
  if (k >= 1) {
    for (int l = 1; l <= 4; ++l) {
      if (l == k) continue;
      best = ordMin(best, ord(f(std::min(k, l), std::max(k, l))) + 1);
    }
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        if (i == k || j == k) continue;
        best = ordMin(best, ord(f(i, j)));
      }
    return best;
  }
  // boundary divisor of the distinguished coordinate: expressed through the
  // substituted basis
  for (int l = 2; l <= 4; ++l) best = ordMin(best, ord(f(1, l)) + 1);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k3 = j + 1; k3 <= 4; ++k3)
        best = ordMin(best, ord(f(i, j) - f(i, k3) + f(j, k3)));
  return best;
}

OrdValue hmCoeff(const UData& u, const RatFunc& f, const RatFunc& g, const PrimeDivisor& p) {
  if (f.isZero() && g.isZero()) return OrdValue::inf();
  requireFieldElement(f, "pair entry");
  requireFieldElement(g, "pair entry");
  if (!p.isToric()) return ordMin(ordAt(f, p, u.fan), ordAt(g, p, u.fan));
  const Ring r = unifyRings(f.ring(), g.ring());
  const Coords coords = r.isScalar() ? Coords::affine : r.coords;
  return seminormPhi(u.rayUnit(p.rayId(), coords), p, f, g, u.fan);
}

OrdValue decoCoeff(const Decoration& d, const VectorElem& v, const PrimeDivisor& p) {
  if (static_cast<int>(v.size()) != d.rank())
    fail("KindMismatch", "element size does not match decoration rank");
  if (elemIsZero(v)) return OrdValue::inf();

  struct Visitor {
    const Decoration& self;
    const VectorElem& v;
    const PrimeDivisor& p;

    OrdValue operator()(const RankOneDeco& d) const {
      const RatFunc& f = v[0];
      OrdValue val = ordAt(f, p, self.fan());
      const Ring r = f.ring();
      if (!r.isScalar() && r.coords == Coords::cox) {
        // graded sections are read through the z0-trivialization
        const int deg = gradedDegree(f);
        if (deg != 0 && p.isToric() && self.fan().varSlot(p.rayId()) == 0) val = val + (-deg);
      }
      return val + d.d.coefficient(p);
    }
    OrdValue operator()(const DirectSumDeco& d) const {
      OrdValue best = OrdValue::inf();
      std::size_t offset = 0;
      for (const Decoration& part : d.parts) {
        const std::size_t r = static_cast<std::size_t>(part.rank());
        VectorElem sub(v.begin() + static_cast<long>(offset),
                       v.begin() + static_cast<long>(offset + r));
        offset += r;
        if (elemIsZero(sub)) continue;
        best = ordMin(best, decoCoeff(part, sub, p));
      }
      return best;
    }
    OrdValue operator()(const PhiDeco& d) const {
      requireFieldElement(v, "pair entry");
      for (const auto& [prime, h] : d.units)
        if (prime == p) return seminormPhi(h, p, v[0], v[1], self.fan());
      return ordMin(ordAt(v[0], p, self.fan()), ordAt(v[1], p, self.fan()));
    }
    OrdValue operator()(const OmegaDeco& d) const { return omegaCoeff(self.fan(), v, p, d.log); }
    OrdValue operator()(const TangentDeco&) const { return tangentCoeff(self.fan(), v, p); }
    OrdValue operator()(const Lambda2TDeco&) const { return lambda2tCoeff(self.fan(), v, p); }
    OrdValue operator()(const HMDeco& d) const { return hmCoeff(d.u, v[0], v[1], p); }
  };
  return std::visit(Visitor{d, v, p}, d.data());
}

OrdValue dualBound(const Decoration& d, const VectorElem& phi, const VectorElem& v,
                   const PrimeDivisor& p) {
  if (phi.size() != v.size() || static_cast<int>(v.size()) != d.rank())
    fail("DimensionMismatch", "functional and vector must match the decoration rank");
  if (elemIsZero(v)) fail("ZeroInput", "dual bound needs a nonzero vector");
  RatFunc value;
  for (std::size_t i = 0; i < v.size(); ++i) value += phi[i] * v[i];
  return ordAt(value, p, d.fan()) - decoCoeff(d, v, p);
}

namespace {

VectorElem zeroElem(int rank) { return VectorElem(static_cast<std::size_t>(rank)); }

std::string describeElem(const VectorElem& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].str();
  }
  out << ")";
  return out.str();
}

// directed pairs (h*w, w) whose ratio matches a declared unit
DirectedGen directedGenFor(const Decoration& d) {
  if (const auto* hm = std::get_if<HMDeco>(&d.data())) {
    UData u = hm->u;
    const bool cox = u.fan.isProjectiveSpace();
    return [u, cox](Sampler& s) -> std::optional<VectorElem> {
      const int ray = s.uniform(0, u.fan.rayCount() - 1);
      const RatFunc h = u.rayUnit(ray, cox ? Coords::cox : Coords::affine);
      const RatFunc w = s.scalar();
      return VectorElem{h * w, w};
    };
  }
  if (const auto* phi = std::get_if<PhiDeco>(&d.data())) {
    std::vector<RatFunc> hs;
    for (const auto& [prime, h] : phi->units)
      if (h) hs.push_back(*h);
    if (hs.empty()) return nullptr;
    return [hs](Sampler& s) -> std::optional<VectorElem> {
      const RatFunc& h = hs[static_cast<std::size_t>(s.uniform(0, static_cast<int>(hs.size()) - 1))];
      const RatFunc w = s.scalar();
      return VectorElem{h * w, w};
    };
  }
  return nullptr;
}

Ring elementRingFor(const Decoration& d) {
  if (std::holds_alternative<Lambda2TDeco>(d.data()) ||
      (std::holds_alternative<HMDeco>(d.data()) && d.fan().isProjectiveSpace()))
    return d.fan().coxRing();
  return d.fan().torusRing();
}

}  // namespace

CheckReport axiomsCheckFn(int rank, const Ring& ring, const Fan& fan, const CoeffFn& fn,
                          const std::vector<PrimeDivisor>& primes, int samples, uint64_t seed,
                          const DirectedGen& directed) {
  CheckReport rep;
  Sampler sampler(seed, ring);

  // (W0): the zero vector is the only one with coefficient +inf
  for (const PrimeDivisor& p : primes) {
    ++rep.checked;
    if (fn(zeroElem(rank), p) != OrdValue::inf()) {
      rep.pass = false;
      rep.counterexample = "(W0) fails at " + p.str(&fan) + ": zero vector has finite coefficient";
      return rep;
    }
  }

  struct Case {
    VectorElem v, v2;
    RatFunc f;
  };
  std::vector<Case> cases;
  cases.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    Case c;
    c.v = sampler.elementCoords(rank, false);
    c.v2 = sampler.elementCoords(rank, false);
    if (directed && sampler.uniform(0, 3) == 0) {
      if (auto dv = directed(sampler)) c.v = *dv;
      if (sampler.uniform(0, 1) == 0) {
        if (auto dv2 = directed(sampler)) c.v2 = *dv2;
      }
    }
    if (sampler.uniform(0, 7) == 0) c.v2 = elemScale(RatFunc(-1), c.v);  // forced cancellation
    c.f = sampler.scalar();
    cases.push_back(std::move(c));
  }

  for (const Case& c : cases) {
    for (const PrimeDivisor& p : primes) {
      ++rep.checked;
      const OrdValue wv = fn(c.v, p);
      const OrdValue wv2 = fn(c.v2, p);
      // (W1)
      const OrdValue lhs1 = fn(elemScale(c.f, c.v), p);
      const OrdValue rhs1 = ordAt(c.f, p, fan) + wv;
      if (lhs1 != rhs1) {
        rep.pass = false;
        rep.counterexample = "(W1) fails at " + p.str(&fan) + " for f = " + c.f.str() +
                             ", v = " + describeElem(c.v) + ": " + lhs1.str() + " vs " + rhs1.str();
        return rep;
      }
      // (W2)
      const OrdValue lhs2 = fn(elemAdd(c.v, c.v2), p);
      if (lhs2 < ordMin(wv, wv2)) {
        rep.pass = false;
        rep.counterexample = "(W2) fails at " + p.str(&fan) + " for v = " + describeElem(c.v) +
                             ", v' = " + describeElem(c.v2) + ": " + lhs2.str() + " < min(" +
                             wv.str() + ", " + wv2.str() + ")";
        return rep;
      }
    }
  }
  return rep;
}

CheckReport axiomsCheck(const Decoration& d, const std::vector<PrimeDivisor>& primes, int samples,
                        uint64_t seed) {
  const CoeffFn fn = [&d](const VectorElem& v, const PrimeDivisor& p) {
    return decoCoeff(d, v, p);
  };
  return axiomsCheckFn(d.rank(), elementRingFor(d), d.fan(), fn, primes, samples, seed,
                       directedGenFor(d));
}

CheckReport morphismCheck(const DenseMat<RatFunc>& mu, const Decoration& d, const Decoration& d2,
                          const std::vector<PrimeDivisor>& primes, int samples, uint64_t seed) {
  if (mu.rows() != d2.rank() || mu.cols() != d.rank())
    fail("DimensionMismatch", "matrix shape does not match the two ranks");
  CheckReport rep;
  Sampler sampler(seed, elementRingFor(d));
  const DirectedGen directed = directedGenFor(d);
  for (int i = 0; i < samples; ++i) {
    VectorElem v = sampler.elementCoords(d.rank(), false);
    if (directed && sampler.uniform(0, 3) == 0) {
      if (auto dv = directed(sampler)) v = *dv;
    }
    VectorElem w(static_cast<std::size_t>(d2.rank()));
    for (int r = 0; r < mu.rows(); ++r) {
      RatFunc sum;
      for (int c = 0; c < mu.cols(); ++c) sum += mu(r, c) * v[static_cast<std::size_t>(c)];
      w[static_cast<std::size_t>(r)] = sum;
    }
    for (const PrimeDivisor& p : primes) {
      ++rep.checked;
      const OrdValue lhs = decoCoeff(d, v, p);
      const OrdValue rhs = elemIsZero(w) ? OrdValue::inf() : decoCoeff(d2, w, p);
      if (!(lhs <= rhs)) {
        rep.pass = false;
        rep.counterexample = "W(v) <= W'(mu v) fails at " + p.str(&d.fan()) +
                             " for v = " + describeElem(v) + ": " + lhs.str() + " > " + rhs.str();
        return rep;
      }
    }
  }
  return rep;
}

CheckReport orthogonalityCheck(const std::vector<VectorElem>& basis, const Decoration& d,
                               const PrimeDivisor& p, int samples, uint64_t seed, bool directed) {
  const std::size_t s = basis.size();
  if (s == 0) fail("LinearlyDependent", "empty basis");
  for (const VectorElem& v : basis)
    if (static_cast<int>(v.size()) != d.rank())
      fail("KindMismatch", "basis element size does not match decoration rank");
  {
    DenseMat<RatFunc> m(static_cast<Eigen::Index>(s), d.rank());
    for (std::size_t i = 0; i < s; ++i)
      for (int j = 0; j < d.rank(); ++j) m(static_cast<Eigen::Index>(i), j) = basis[i][static_cast<std::size_t>(j)];
    if (exactRank(m) != static_cast<int>(s))
      fail("LinearlyDependent", "basis vectors are K-linearly dependent");
  }
  CheckReport rep;
  Sampler sampler(seed, elementRingFor(d));
  const DirectedGen gen = directedGenFor(d);
  for (int i = 0; i < samples; ++i) {
    std::vector<RatFunc> coeffs;
    for (std::size_t k = 0; k < s; ++k)
      coeffs.push_back(sampler.uniform(0, 5) == 0 ? RatFunc() : sampler.scalar());
    if (directed && gen && s >= 2 && sampler.uniform(0, 2) == 0) {
      if (auto dv = gen(sampler)) {
        for (std::size_t k = 0; k < s && k < dv->size(); ++k) coeffs[k] = (*dv)[k];
        for (std::size_t k = dv->size(); k < s; ++k) coeffs[k] = RatFunc();
      }
    }
    VectorElem sum = zeroElem(d.rank());
    OrdValue expected = OrdValue::inf();
    for (std::size_t k = 0; k < s; ++k) {
      sum = elemAdd(sum, elemScale(coeffs[k], basis[k]));
      expected = ordMin(expected, ordAt(coeffs[k], p, d.fan()));
    }
    ++rep.checked;
    const OrdValue got = decoCoeff(d, sum, p);
    if (got != expected) {
      rep.pass = false;
      std::ostringstream out;
      out << "orthogonality fails at " << p.str(&d.fan()) << " for coefficients (";
      for (std::size_t k = 0; k < s; ++k) {
        if (k) out << ", ";
        out << coeffs[k].str();
      }
      out << "): W = " << got.str() << ", min ord = " << expected.str();
      rep.counterexample = out.str();
      return rep;
    }
  }
  return rep;
}

namespace {

std::vector<Eigen::VectorXi> latticeBox(int dim, int range) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi cur = Eigen::VectorXi::Constant(dim, -range);
  while (true) {
    if (!cur.isZero()) out.push_back(cur);
    int i = 0;
    while (i < dim) {
      if (cur[i] < range) {
        ++cur[i];
        break;
      }
      cur[i] = -range;
      ++i;
    }
    if (i == dim) break;
  }
  return out;
}

std::string vecString(const Eigen::VectorXi& v) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

SliceTable toricSliceTable(SliceKind kind, const Fan& fan, const UData* u, int range) {
  SliceTable table;
  table.kind = kind;
  if (kind == SliceKind::hm) {
    if (!u) fail("InvalidU", "the hm slice needs the defining matrix");
    table.basisNote = "constant pairs (a, b)";
    for (int a = -1; a <= 2; ++a)
      for (int b = -1; b <= 2; ++b) {
        if (a == 0 && b == 0) continue;
        const RatFunc fa{Rational(a)};
        const RatFunc fb{Rational(b)};
        for (const Ray& r : fan.rays) {
          SliceRow row;
          std::ostringstream name;
          name << "(" << a << ", " << b << ")";
          row.element = name.str();
          row.rayId = r.id;
          row.b = hmCoeff(*u, fa, fb, PrimeDivisor::toric(r.id));
          table.rows.push_back(row);
        }
      }
    return table;
  }
  table.basisNote = kind == SliceKind::omega ? "lattice characters m" : "lattice covectors a";
  for (const Eigen::VectorXi& m : latticeBox(fan.dim, range)) {
    VectorElem coords;
    for (int i = 0; i < fan.dim; ++i) coords.push_back(RatFunc(Rational(m[i])));
    for (const Ray& r : fan.rays) {
      SliceRow row;
      row.element = vecString(m);
      row.rayId = r.id;
      row.b = kind == SliceKind::omega ? omegaCoeff(fan, coords, PrimeDivisor::toric(r.id), false)
                                       : tangentCoeff(fan, coords, PrimeDivisor::toric(r.id));
      table.rows.push_back(row);
    }
  }
  return table;
}

std::vector<FiltrationLevel> klyachkoFiltration(SliceKind kind, const Fan& fan, const UData* u,
                                                int rayId) {
  const Ray& ray = fan.ray(rayId);
  std::vector<FiltrationLevel> levels;
  auto fullBasis = [](int dim) {
    std::vector<DenseVec<Rational>> basis;
    for (int i = 0; i < dim; ++i) {
      DenseVec<Rational> e(dim);
      for (int j = 0; j < dim; ++j) e[j] = i == j ? 1 : 0;
      basis.push_back(e);
    }
    return basis;
  };
  auto level = [&levels](long l, std::vector<DenseVec<Rational>> basis, std::string note) {
    FiltrationLevel out;
    out.level = l;
    out.dim = static_cast<int>(basis.size());
    out.basis = std::move(basis);
    out.note = std::move(note);
    levels.push_back(std::move(out));
  };

  switch (kind) {
    case SliceKind::omega: {
      DenseMat<Rational> rowVec(1, fan.dim);
      for (int i = 0; i < fan.dim; ++i) rowVec(0, i) = ray.v[i];
      DenseMat<Rational> ker = exactKernel(rowVec);
      std::vector<DenseVec<Rational>> kerBasis;
      for (int j = 0; j < ker.cols(); ++j) kerBasis.push_back(ker.col(j));
      level(-1, fullBasis(fan.dim), "all characters");
      level(0, std::move(kerBasis), "characters orthogonal to the ray");
      level(1, {}, "zero");
      return levels;
    }
    case SliceKind::tangent: {
      DenseVec<Rational> r(fan.dim);
      for (int i = 0; i < fan.dim; ++i) r[i] = ray.v[i];
      level(0, fullBasis(fan.dim), "all covectors");
      level(1, {r}, "the ray line");
      level(2, {}, "zero");
      return levels;
    }
    case SliceKind::hm: {
      if (!u) fail("InvalidU", "the hm filtration needs the defining matrix");
      level(0, fullBasis(2), "all constant pairs");
      if (u->rayCharacter(rayId).isZero()) {
        DenseVec<Rational> diag(2);
        diag[0] = 1;
        diag[1] = 1;
        level(1, {diag}, "diagonal pairs");
        level(2, {}, "zero");
      } else {
        level(1, {}, "zero");
      }
      return levels;
    }
  }
  fail("UnsupportedKind", "unknown slice kind");
}

}  // namespace weildeco
