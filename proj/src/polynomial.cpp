#include "weildeco/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace weildeco {

int totalDegree(const Exponents& e) { return e.size() == 0 ? 0 : e.sum(); }

bool expEquals(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) return false;
  return a == b;
}

bool grevlexLess(const Exponents& a, const Exponents& b) {
  const int da = totalDegree(a), db = totalDegree(b);
  if (da != db) return da < db;
  // equal degree: a < b iff the last nonzero entry of a-b is positive
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    const int d = a[i] - b[i];
    if (d != 0) return d > 0;
  }
  return false;
}

bool lexLess(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool expDivides(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) return false;
  return (a.array() <= b.array()).all();
}

Exponents expMax(const Exponents& a, const Exponents& b) { return a.cwiseMax(b); }
Exponents expMin(const Exponents& a, const Exponents& b) { return a.cwiseMin(b); }

namespace {

struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grevlexLess(b, a); }
};

Exponents zeroExponents(const Ring& ring) {
  return Exponents::Zero(ring.isScalar() ? 0 : ring.vars);
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back(Term{Exponents(), c});
}

Polynomial Polynomial::zero(const Ring& ring) {
  Polynomial p;
  p.ring_ = ring;
  return p;
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  Polynomial p;
  p.ring_ = ring;
  if (c != 0) p.terms_.push_back(Term{zeroExponents(ring), c});
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, int i, int power) {
  if (ring.isScalar() || i < 0 || i >= ring.vars)
    fail("IndexOutOfRange", "variable index " + std::to_string(i));
  if (power < 0) fail("IndexOutOfRange", "negative power in Polynomial::variable");
  Exponents e = zeroExponents(ring);
  e[i] = power;
  return monomial(ring, e);
}

Polynomial Polynomial::monomial(const Ring& ring, const Exponents& e, const Rational& c) {
  if (e.size() != (ring.isScalar() ? 0 : ring.vars))
    fail("DimensionMismatch", "exponent vector length does not match ring");
  if ((e.array() < 0).any()) fail("IndexOutOfRange", "negative exponent in Polynomial::monomial");
  Polynomial p;
  p.ring_ = ring;
  if (c != 0) p.terms_.push_back(Term{e, c});
  return p;
}

Polynomial Polynomial::fromTerms(const Ring& ring, std::vector<Term> terms) {
  Polynomial p;
  p.ring_ = ring;
  p.terms_ = std::move(terms);
  for (const Term& t : p.terms_) {
    if (t.e.size() != (ring.isScalar() ? 0 : ring.vars))
      fail("DimensionMismatch", "exponent vector length does not match ring");
    if ((t.e.array() < 0).any()) fail("IndexOutOfRange", "negative exponent");
  }
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grevlexLess(b.e, a.e); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && expEquals(merged.back().e, t.e)) {
      merged.back().c += t.c;
      if (merged.back().c == 0) merged.pop_back();
    } else if (t.c != 0) {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && weildeco::totalDegree(terms_[0].e) == 0);
}

Rational Polynomial::constantValue() const {
  if (terms_.empty()) return Rational(0);
  if (!isConstant()) fail("KindMismatch", "polynomial is not constant");
  return terms_[0].c;
}

const Polynomial::Term& Polynomial::leadingTerm() const {
  if (terms_.empty()) fail("ZeroInput", "leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::totalDegree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, weildeco::totalDegree(t.e));
  return d;
}

bool Polynomial::isHomogeneous() const {
  if (terms_.empty()) return true;
  const int d = weildeco::totalDegree(terms_[0].e);
  for (const Term& t : terms_)
    if (weildeco::totalDegree(t.e) != d) return false;
  return true;
}

bool Polynomial::dependsOn(int var) const {
  for (const Term& t : terms_)
    if (var < t.e.size() && t.e[var] > 0) return true;
  return false;
}

bool Polynomial::divisibleByVariable(int var) const {
  if (terms_.empty()) return true;
  for (const Term& t : terms_)
    if (var >= t.e.size() || t.e[var] == 0) return false;
  return true;
}

Polynomial Polynomial::promoted(const Ring& ring) const {
  if (ring_ == ring || ring.isScalar()) return *this;
  if (!ring_.isScalar()) fail("CoordinateMismatch", "cannot promote between distinct rings");
  Polynomial p = Polynomial::zero(ring);
  for (const Term& t : terms_) p.terms_.push_back(Term{zeroExponents(ring), t.c});
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.c = -t.c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  const Ring r = unifyRings(ring_, rhs.ring_);
  Polynomial a = promoted(r);
  Polynomial b = rhs.promoted(r);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && grevlexLess(b.terms_[j].e, a.terms_[i].e))) {
      out.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || grevlexLess(a.terms_[i].e, b.terms_[j].e)) {
      out.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].c + b.terms_[j].c;
      if (c != 0) out.push_back(Term{a.terms_[i].e, c});
      ++i;
      ++j;
    }
  }
  ring_ = r;
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  const Ring r = unifyRings(ring_, rhs.ring_);
  Polynomial a = promoted(r);
  Polynomial b = rhs.promoted(r);
  std::map<Exponents, Rational, GrevlexGreater> acc;
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      Exponents e = s.e.size() == t.e.size() ? Exponents(s.e + t.e)
                                             : (s.e.size() == 0 ? t.e : s.e);
      auto [it, inserted] = acc.emplace(std::move(e), s.c * t.c);
      if (!inserted) {
        it->second += s.c * t.c;
        if (it->second == 0) acc.erase(it);
      }
    }
  }
  ring_ = r;
  terms_.clear();
  terms_.reserve(acc.size());
  for (auto& [e, c] : acc) terms_.push_back(Term{e, c});
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p = *this;
  if (c == 0) {
    p.terms_.clear();
    return p;
  }
  for (Term& t : p.terms_) t.c *= c;
  return p;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) fail("IndexOutOfRange", "negative exponent in Polynomial::pow");
  Polynomial r = Polynomial::constant(ring_, 1);
  Polynomial b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() && b.isZero()) return true;
  Ring r;
  try {
    r = unifyRings(a.ring_, b.ring_);
  } catch (const Error&) {
    return false;
  }
  const Polynomial pa = a.promoted(r);
  const Polynomial pb = b.promoted(r);
  if (pa.terms_.size() != pb.terms_.size()) return false;
  for (std::size_t i = 0; i < pa.terms_.size(); ++i) {
    if (!expEquals(pa.terms_[i].e, pb.terms_[i].e) || pa.terms_[i].c != pb.terms_[i].c)
      return false;
  }
  return true;
}

Polynomial Polynomial::substituteZero(int var) const {
  if (ring_.isScalar()) return *this;
  if (var < 0 || var >= ring_.vars) fail("IndexOutOfRange", "variable index " + std::to_string(var));
  std::vector<Term> kept;
  for (const Term& t : terms_)
    if (t.e[var] == 0) kept.push_back(t);
  return fromTerms(ring_, std::move(kept));
}

Polynomial Polynomial::substituteOneAndDrop(int var, const Ring& targetRing) const {
  if (ring_.isScalar()) return promoted(targetRing);
  if (var < 0 || var >= ring_.vars) fail("IndexOutOfRange", "variable index " + std::to_string(var));
  if (targetRing.vars != ring_.vars - 1)
    fail("DimensionMismatch", "target ring must have one variable fewer");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Exponents e(ring_.vars - 1);
    int k = 0;
    for (int i = 0; i < ring_.vars; ++i)
      if (i != var) e[k++] = t.e[i];
    out.push_back(Term{e, t.c});
  }
  return fromTerms(targetRing, std::move(out));
}

Rational Polynomial::evaluateAt(const std::vector<Rational>& point) const {
  if (!ring_.isScalar() && static_cast<int>(point.size()) != ring_.vars)
    fail("DimensionMismatch", "evaluation point has wrong length");
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational v = t.c;
    for (int i = 0; i < t.e.size(); ++i)
      if (t.e[i] != 0) v *= rationalPow(point[i], t.e[i]);
    sum += v;
  }
  return sum;
}

Exponents Polynomial::contentExponents() const {
  if (terms_.empty()) fail("ZeroInput", "content of zero polynomial");
  Exponents m = terms_[0].e;
  for (const Term& t : terms_) m = expMin(m, t.e);
  return m;
}

Rational Polynomial::content() const {
  if (terms_.empty()) fail("ZeroInput", "content of zero polynomial");
  Integer num = 0, den = 1;
  for (const Term& t : terms_) {
    num = boost::multiprecision::gcd(num, numerator(t.c));
    den = boost::multiprecision::lcm(den, denominator(t.c));
  }
  Rational c(num, den);
  if (leadingTerm().c < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitivePart() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / content());
}

Polynomial Polynomial::divideByMonomial(const Exponents& e) const {
  Polynomial p = *this;
  for (Term& t : p.terms_) {
    if (!expDivides(e, t.e)) fail("NotDivisible", "monomial does not divide all terms");
    t.e -= e;
  }
  return p;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < t.e.size(); ++i) {
      if (t.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.varName(i);
      if (t.e[i] != 1) mono += "^" + std::to_string(t.e[i]);
    }
    if (mono.empty()) {
      out << toString(c);
    } else {
      if (c != 1) out << toString(c) << "*";
      out << mono;
    }
  }
  return out.str();
}

bool tryExactDivide(const Polynomial& a, const Polynomial& b, Polynomial& quotient) {
  if (b.isZero()) fail("DivisionByZero", "exact division by zero polynomial");
  const Ring r = unifyRings(a.ring(), b.ring());
  Polynomial rem = a.promoted(r);
  const Polynomial d = b.promoted(r);
  Polynomial q = Polynomial::zero(r);
  const auto& lt = d.leadingTerm();
  while (!rem.isZero()) {
    const auto& lr = rem.leadingTerm();
    if (lr.e.size() != lt.e.size() || !expDivides(lt.e, lr.e)) return false;
    Polynomial t = Polynomial::monomial(r, lr.e - lt.e, lr.c / lt.c);
    q += t;
    rem -= t * d;
  }
  quotient = q;
  return true;
}

Polynomial exactDivide(const Polynomial& a, const Polynomial& b) {
  Polynomial q;
  if (!tryExactDivide(a, b, q)) fail("NotDivisible", "no exact polynomial quotient");
  return q;
}

int multiplicity(const Polynomial& f, const Polynomial& p) {
  if (f.isZero()) fail("ZeroInput", "multiplicity of zero polynomial");
  if (p.isConstant()) fail("ZeroInput", "multiplicity with respect to a constant");
  int k = 0;
  Polynomial cur = f, q;
  while (tryExactDivide(cur, p, q)) {
    cur = q;
    ++k;
  }
  return k;
}

}  // namespace weildeco
