#include "weildeco/groebner.hpp"

#include <algorithm>
#include <sstream>

namespace weildeco {

FreeVector FreeVector::zero(const Ring& ring, int rank) {
  FreeVector v;
  v.c.assign(static_cast<std::size_t>(rank), Polynomial::zero(ring));
  return v;
}

FreeVector FreeVector::unit(const Ring& ring, int rank, int comp) {
  FreeVector v = zero(ring, rank);
  v.c[static_cast<std::size_t>(comp)] = Polynomial::constant(ring, 1);
  return v;
}

bool FreeVector::isZero() const {
  for (const Polynomial& p : c)
    if (!p.isZero()) return false;
  return true;
}

Ring FreeVector::ring() const {
  Ring r = Ring::scalar();
  for (const Polynomial& p : c) r = unifyRings(r, p.ring());
  return r;
}

FreeVector FreeVector::operator-() const {
  FreeVector v = *this;
  for (Polynomial& p : v.c) p = -p;
  return v;
}

FreeVector& FreeVector::operator+=(const FreeVector& rhs) {
  if (rank() != rhs.rank()) fail("RankMismatch", "free module ranks differ");
  for (int i = 0; i < rank(); ++i) c[i] += rhs.c[i];
  return *this;
}

FreeVector& FreeVector::operator-=(const FreeVector& rhs) { return *this += -rhs; }

FreeVector FreeVector::scaled(const Polynomial& f) const {
  FreeVector v = *this;
  for (Polynomial& p : v.c) p *= f;
  return v;
}

FreeVector FreeVector::scaled(const Rational& q) const {
  FreeVector v = *this;
  for (Polynomial& p : v.c) p = p.scaled(q);
  return v;
}

bool operator==(const FreeVector& a, const FreeVector& b) {
  if (a.rank() != b.rank()) return false;
  for (int i = 0; i < a.rank(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

FreeVector FreeVector::primitive() const {
  Integer num = 0, den = 1;
  int firstNonzero = -1;
  for (int i = 0; i < rank(); ++i) {
    if (c[i].isZero()) continue;
    if (firstNonzero < 0) firstNonzero = i;
    for (const auto& t : c[i].terms()) {
      num = boost::multiprecision::gcd(num, numerator(t.c));
      den = boost::multiprecision::lcm(den, denominator(t.c));
    }
  }
  if (firstNonzero < 0) return *this;
  Rational content(num, den);
  if (c[firstNonzero].leadingTerm().c < 0) content = -content;
  return scaled(Rational(1) / content);
}

std::string FreeVector::str() const {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) out << ", ";
    out << c[i].str();
  }
  out << ")";
  return out.str();
}

namespace {

bool baseGreater(BaseOrder base, const Exponents& a, const Exponents& b) {
  return base == BaseOrder::grevlex ? grevlexLess(b, a) : lexLess(b, a);
}

// Maximal term of a nonzero polynomial under the base order. Storage is
// grevlex-sorted, so grevlex reads off the first term.
const Polynomial::Term& maxTermUnderBase(const Polynomial& p, BaseOrder base) {
  if (base == BaseOrder::grevlex) return p.leadingTerm();
  const Polynomial::Term* best = &p.terms()[0];
  for (const auto& t : p.terms())
    if (lexLess(best->e, t.e)) best = &t;
  return *best;
}

}  // namespace

bool termGreater(const ModuleOrder& order, int c1, const Exponents& e1, int c2,
                 const Exponents& e2) {
  if (order.rule == PositionRule::positionOverTerm) {
    if (c1 != c2) return order.prio(c1) < order.prio(c2);
    return baseGreater(order.base, e1, e2);
  }
  if (!expEquals(e1, e2)) return baseGreater(order.base, e1, e2);
  return order.prio(c1) < order.prio(c2);
}

ModuleTerm leadingModuleTerm(const FreeVector& v, const ModuleOrder& order) {
  ModuleTerm best;
  for (int i = 0; i < v.rank(); ++i) {
    if (v.c[i].isZero()) continue;
    const auto& t = maxTermUnderBase(v.c[i], order.base);
    if (best.comp < 0 || termGreater(order, i, t.e, best.comp, best.e)) {
      best.comp = i;
      best.e = t.e;
      best.coeff = t.c;
    }
  }
  if (best.comp < 0) fail("ZeroInput", "leading term of zero vector");
  return best;
}

namespace {

FreeVector mulMonomial(const FreeVector& v, const Ring& ring, const Exponents& e,
                       const Rational& coeff) {
  return v.scaled(Polynomial::monomial(ring, e, coeff));
}

struct Engine {
  Ring ring;
  int rank;
  ModuleOrder order;

  // Full normal form: no term of the remainder is divisible by any leading
  // term of the basis in the same component.
  FreeVector normalFormOf(FreeVector v, const std::vector<FreeVector>& basis) const {
    FreeVector rem = FreeVector::zero(ring, rank);
    std::vector<ModuleTerm> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) leads.push_back(leadingModuleTerm(g, order));
    while (!v.isZero()) {
      const ModuleTerm t = leadingModuleTerm(v, order);
      bool reduced = false;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (leads[k].comp == t.comp && expDivides(leads[k].e, t.e)) {
          v -= mulMonomial(basis[k], ring, t.e - leads[k].e, t.coeff / leads[k].coeff);
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        Polynomial mono = Polynomial::monomial(ring, t.e, t.coeff);
        rem.c[t.comp] += mono;
        v.c[t.comp] -= mono;
      }
    }
    return rem;
  }

  // S-pairs are formed only between elements whose leading terms live in the
  // same component; the product criterion is not valid for modules and is
  // not used.
  std::vector<FreeVector> completeBasis(std::vector<FreeVector> basis) const {
    std::vector<FreeVector> g;
    for (FreeVector& v : basis)
      if (!v.isZero()) g.push_back(v.primitive());
    struct Pair {
      std::size_t i, j;
    };
    std::vector<Pair> pairs;
    auto addPairs = [&](std::size_t j) {
      const ModuleTerm lj = leadingModuleTerm(g[j], order);
      for (std::size_t i = 0; i < j; ++i)
        if (leadingModuleTerm(g[i], order).comp == lj.comp) pairs.push_back(Pair{i, j});
    };
    for (std::size_t j = 0; j < g.size(); ++j) addPairs(j);
    std::size_t next = 0;
    while (next < pairs.size()) {
      const Pair pr = pairs[next++];
      const ModuleTerm li = leadingModuleTerm(g[pr.i], order);
      const ModuleTerm lj = leadingModuleTerm(g[pr.j], order);
      const Exponents gamma = expMax(li.e, lj.e);
      FreeVector s = mulMonomial(g[pr.i], ring, gamma - li.e, Rational(1) / li.coeff) -
                     mulMonomial(g[pr.j], ring, gamma - lj.e, Rational(1) / lj.coeff);
      FreeVector r = normalFormOf(std::move(s), g);
      if (!r.isZero()) {
        g.push_back(r.primitive());
        addPairs(g.size() - 1);
      }
    }
    return interreduce(std::move(g));
  }

  std::vector<FreeVector> interreduce(std::vector<FreeVector> g) const {
    std::vector<bool> keep(g.size(), true);
    std::vector<ModuleTerm> leads;
    leads.reserve(g.size());
    for (const auto& v : g) leads.push_back(leadingModuleTerm(v, order));
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j || !keep[j]) continue;
        if (leads[j].comp == leads[i].comp && expDivides(leads[j].e, leads[i].e)) {
          if (expEquals(leads[j].e, leads[i].e) && j > i) continue;  // keep the earlier one
          keep[i] = false;
          break;
        }
      }
    }
    std::vector<FreeVector> kept;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (keep[i]) kept.push_back(g[i]);
    std::vector<FreeVector> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<FreeVector> others;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      FreeVector v = others.empty() ? kept[i] : normalFormOf(kept[i], others);
      const ModuleTerm lt = leadingModuleTerm(v, order);
      out.push_back(v.scaled(Rational(1) / lt.coeff));
    }
    std::sort(out.begin(), out.end(), [this](const FreeVector& a, const FreeVector& b) {
      const ModuleTerm la = leadingModuleTerm(a, order);
      const ModuleTerm lb = leadingModuleTerm(b, order);
      return termGreater(order, la.comp, la.e, lb.comp, lb.e);
    });
    return out;
  }
};

Engine engineFor(const Submodule& m, const ModuleOrder& order) {
  return Engine{m.ring, m.rank, order};
}

}  // namespace

Submodule makeSubmodule(const Ring& ring, int rank, std::vector<FreeVector> gens) {
  Submodule m;
  m.ring = ring;
  m.rank = rank;
  for (FreeVector& v : gens) {
    if (v.rank() != rank) fail("RankMismatch", "generator rank mismatch");
    for (Polynomial& p : v.c) {
      unifyRings(ring, p.ring());
      p = p.promoted(ring);
    }
  }
  m.gens = std::move(gens);
  return m;
}

Submodule makeSubmoduleWithBasis(const Ring& ring, int rank, std::vector<FreeVector> gens,
                                 std::vector<FreeVector> gb, const ModuleOrder& order) {
  Submodule viaGens = buchberger(makeSubmodule(ring, rank, gens), order);
  Submodule claimed = buchberger(makeSubmodule(ring, rank, gb), order);
  for (const FreeVector& v : gb)
    if (!normalForm(v, viaGens, order).isZero())
      fail("KindMismatch", "supplied basis is not contained in the generated module");
  for (const FreeVector& v : gens)
    if (!normalForm(v, claimed, order).isZero())
      fail("KindMismatch", "supplied basis does not generate the module");
  Submodule out = makeSubmodule(ring, rank, std::move(gens));
  out.gbOrder = order;
  out.gb = std::move(gb);
  return out;
}

Submodule buchberger(const Submodule& m, const ModuleOrder& order) {
  if (m.hasGB() && *m.gbOrder == order) return m;
  Submodule out = m;
  out.gb = engineFor(m, order).completeBasis(m.gens);
  out.gbOrder = order;
  return out;
}

void ensureGroebner(Submodule& m, const ModuleOrder& order) {
  if (!m.hasGB() || !(*m.gbOrder == order)) m = buchberger(m, order);
}

FreeVector normalForm(const FreeVector& v, const Submodule& m, const ModuleOrder& order) {
  if (!m.hasGB() || !(*m.gbOrder == order))
    fail("OrderMismatch", "no Groebner basis cached under the requested order");
  if (v.rank() != m.rank) fail("RankMismatch", "vector rank mismatch");
  FreeVector w = v;
  for (Polynomial& p : w.c) p = p.promoted(m.ring);
  if (m.gb.empty()) return w;
  return engineFor(m, order).normalFormOf(w, m.gb);
}

bool isMember(const FreeVector& v, Submodule& m) {
  ensureGroebner(m);
  return normalForm(v, m).isZero();
}

Presentation syzygies(const Submodule& m) {
  Presentation pres;
  pres.ring = m.ring;
  pres.genCount = static_cast<int>(m.gens.size());
  const int s = pres.genCount;
  if (s == 0) return pres;
  const int big = m.rank + s;
  std::vector<FreeVector> lifted;
  for (int i = 0; i < s; ++i) {
    FreeVector v = FreeVector::zero(m.ring, big);
    for (int j = 0; j < m.rank; ++j) v.c[j] = m.gens[i].c[j];
    v.c[m.rank + i] = Polynomial::constant(m.ring, 1);
    lifted.push_back(std::move(v));
  }
  // position-over-term with the module block first eliminates that block
  const ModuleOrder elim{BaseOrder::grevlex, PositionRule::positionOverTerm, {}};
  Engine eng{m.ring, big, elim};
  std::vector<FreeVector> gb = eng.completeBasis(lifted);
  for (const FreeVector& v : gb) {
    bool inSyzBlock = true;
    for (int j = 0; j < m.rank && inSyzBlock; ++j) inSyzBlock = v.c[j].isZero();
    if (!inSyzBlock) continue;
    FreeVector syz = FreeVector::zero(m.ring, s);
    for (int i = 0; i < s; ++i) syz.c[i] = v.c[m.rank + i];
    pres.syzygies.push_back(std::move(syz));
  }
  return pres;
}

Submodule kernelOfMatrix(const Ring& ring, int rows, const std::vector<FreeVector>& columns) {
  for (const FreeVector& col : columns)
    if (col.rank() != rows) fail("RankMismatch", "column length mismatch");
  Presentation pres = syzygies(makeSubmodule(ring, rows, columns));
  return makeSubmodule(ring, static_cast<int>(columns.size()), pres.syzygies);
}

Submodule intersectModules(const Submodule& a, const Submodule& b) {
  if (a.rank != b.rank) fail("RankMismatch", "modules live in different free modules");
  unifyRings(a.ring, b.ring);
  std::vector<FreeVector> cat = a.gens;
  cat.insert(cat.end(), b.gens.begin(), b.gens.end());
  Presentation pres = syzygies(makeSubmodule(a.ring, a.rank, cat));
  const int s = static_cast<int>(a.gens.size());
  std::vector<FreeVector> out;
  for (const FreeVector& syz : pres.syzygies) {
    FreeVector w = FreeVector::zero(a.ring, a.rank);
    for (int i = 0; i < s; ++i) w += a.gens[i].scaled(syz.c[i]);
    if (!w.isZero()) out.push_back(w.primitive());
  }
  Submodule result = buchberger(makeSubmodule(a.ring, a.rank, out));
  result.gens = result.gb;  // canonical generator list
  return result;
}

Submodule saturate(const Submodule& m, const Polynomial& f, int iterationCap) {
  if (f.isZero()) fail("ZeroDivisorInput", "saturation by zero");
  Submodule cur = buchberger(m);
  if (f.isConstant()) return cur;
  std::vector<FreeVector> fUnits;
  for (int j = 0; j < m.rank; ++j)
    fUnits.push_back(FreeVector::unit(m.ring, m.rank, j).scaled(f));
  const Submodule fFree = makeSubmodule(m.ring, m.rank, fUnits);
  for (int iter = 0; iter < iterationCap; ++iter) {
    const Submodule inter = intersectModules(cur, fFree);
    std::vector<FreeVector> quotient;
    for (const FreeVector& w : inter.gens) {
      FreeVector q = FreeVector::zero(m.ring, m.rank);
      for (int j = 0; j < m.rank; ++j)
        q.c[j] = w.c[j].isZero() ? w.c[j] : exactDivide(w.c[j], f);
      quotient.push_back(std::move(q));
    }
    Submodule next = buchberger(makeSubmodule(m.ring, m.rank, quotient));
    next.gens = next.gb;
    if (equalModules(next, cur)) return cur;
    cur = next;
  }
  fail("IterationCap", "saturation did not stabilize within the iteration cap");
}

bool equalModules(const Submodule& a, const Submodule& b) {
  if (a.rank != b.rank) fail("RankMismatch", "modules live in different free modules");
  Submodule ga = buchberger(a);
  Submodule gbm = buchberger(b);
  for (const FreeVector& v : a.gens)
    if (!normalForm(v, gbm).isZero()) return false;
  for (const FreeVector& v : b.gens)
    if (!normalForm(v, ga).isZero()) return false;
  return true;
}

std::vector<FreeVector> minimalGenerators(const Submodule& m) {
  std::vector<FreeVector> current;
  for (const FreeVector& v : m.gens)
    if (!v.isZero()) current.push_back(v);
  for (std::size_t i = current.size(); i-- > 0;) {
    std::vector<FreeVector> rest;
    for (std::size_t j = 0; j < current.size(); ++j)
      if (j != i) rest.push_back(current[j]);
    Submodule span = buchberger(makeSubmodule(m.ring, m.rank, rest));
    if (normalForm(current[i], span).isZero()) current = std::move(rest);
  }
  return current;
}

FreenessProbe localFreenessProbe(const Presentation& p, const std::vector<Rational>& point) {
  if (!p.ring.isScalar() && static_cast<int>(point.size()) != p.ring.vars)
    fail("DimensionMismatch", "evaluation point has wrong length");
  FreenessProbe probe;
  const int s = p.genCount;
  const int k = static_cast<int>(p.syzygies.size());
  if (k == 0) {
    probe.moduleGenericRank = s;
    return probe;  // free presentation: no obstruction anywhere
  }
  DenseMat<Rational> ev(s, k);
  DenseMat<RatFunc> generic(s, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < s; ++i) {
      ev(i, j) = p.syzygies[j].c[i].evaluateAt(point);
      generic(i, j) = RatFunc(p.syzygies[j].c[i]);
    }
  probe.evaluatedRank = exactRank(ev);
  const int genericSyzRank = exactRank(generic);
  probe.moduleGenericRank = s - genericSyzRank;
  probe.obstruction = probe.evaluatedRank < genericSyzRank;
  return probe;
}

}  // namespace weildeco
