#include "weildeco/parse.hpp"
#include "weildeco/polynomial.hpp"
#include "weildeco/rational_function.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace weildeco;

namespace {

const Ring R2 = Ring::affine(2);
const Ring R3 = Ring::affine(3);

Polynomial P(const std::string& s, const Ring& r = R3) {
  RatFunc f = parseExpression(s, r);
  auto q = f.asPolynomial();
  REQUIRE(q.has_value());
  return *q;
}

RatFunc F(const std::string& s, const Ring& r = R3) { return parseExpression(s, r); }

Polynomial randomPoly(std::mt19937_64& rng, const Ring& r, int maxTerms, int maxDeg,
                      bool nonzero = false) {
  std::uniform_int_distribution<int> nt(nonzero ? 1 : 0, maxTerms);
  std::uniform_int_distribution<int> de(0, maxDeg);
  std::uniform_int_distribution<int> co(-4, 4);
  std::vector<Polynomial::Term> terms;
  const int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e(r.vars);
    for (int j = 0; j < r.vars; ++j) e[j] = de(rng);
    int c = co(rng);
    if (nonzero && c == 0) c = 1;
    terms.push_back({e, Rational(c)});
  }
  Polynomial p = Polynomial::fromTerms(r, terms);
  if (nonzero && p.isZero()) return Polynomial::constant(r, 1);
  return p;
}

RatFunc randomRatFunc(std::mt19937_64& rng, const Ring& r) {
  Polynomial num = randomPoly(rng, r, 3, 3);
  Polynomial den = randomPoly(rng, r, 2, 2, true);
  return RatFunc(num, den);
}

}  // namespace

TEST_CASE("exact_divide worked examples") {
  // (x^2 y + x y^2) / (x y) = x + y
  CHECK(exactDivide(P("x1^2*x2 + x1*x2^2"), P("x1*x2")) == P("x1 + x2"));
  // constant term obstruction
  Polynomial q;
  CHECK_FALSE(tryExactDivide(P("x1^2 + 1"), P("x1"), q));
  CHECK_THROWS_AS(exactDivide(P("x1^2 + 1"), P("x1")), Error);
  // repeated-factor division
  CHECK(exactDivide(P("(x1+x2)^2*x3"), P("x1+x2")) == P("(x1+x2)*x3"));
  // division by zero
  CHECK_THROWS_AS(exactDivide(P("x1"), Polynomial::zero(R3)), Error);
}

TEST_CASE("substitute_zero worked examples") {
  CHECK(P("x1 + x2").substituteZero(0) == P("x2"));
  CHECK(P("x1*x2").substituteZero(0).isZero());
  CHECK(P("x2^2 - 1").substituteZero(0) == P("x2^2 - 1"));
  CHECK_THROWS_AS(P("x1").substituteZero(5), Error);
}

TEST_CASE("ratfunc equality worked examples") {
  CHECK(ratfuncEq(F("(x1^2-1)/(x1-1)"), F("x1+1")));
  CHECK_FALSE(ratfuncEq(F("x1/x2"), F("x2/x1")));
  CHECK(ratfuncEq(RatFunc(Polynomial::zero(R3), Polynomial::constant(R3, 1)),
                  RatFunc(Polynomial::zero(R3), P("x1+1"))));
}

TEST_CASE("laurent_split worked examples") {
  {
    auto parts = F("(x1^2 + x1*x2)/(x1^3*x2)").laurentSplit();
    Exponents alpha(3);
    alpha << -2, -1, 0;
    CHECK(parts.alpha == alpha);
    CHECK(parts.a == P("x1 + x2"));
    CHECK(parts.b == Polynomial::constant(R3, 1));
  }
  {
    auto parts = F("x1").laurentSplit();
    Exponents alpha(3);
    alpha << 1, 0, 0;
    CHECK(parts.alpha == alpha);
    CHECK(parts.a == Polynomial::constant(R3, 1));
    CHECK(parts.b == Polynomial::constant(R3, 1));
  }
  {
    auto parts = F("(x1+1)/(x2+1)").laurentSplit();
    CHECK(parts.alpha == Exponents::Zero(3));
    CHECK(parts.a == P("x1+1"));
    CHECK(parts.b == P("x2+1"));
  }
  CHECK_THROWS_AS(RatFunc().laurentSplit(), Error);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    Polynomial a = randomPoly(rng, R2, 3, 3);
    Polynomial b = randomPoly(rng, R2, 3, 3);
    Polynomial c = randomPoly(rng, R2, 3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("exact_divide roundtrip on random products") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = randomPoly(rng, R2, 3, 3);
    Polynomial b = randomPoly(rng, R2, 3, 3, true);
    CHECK(exactDivide(a * b, b) == a);
  }
}

TEST_CASE("ratfunc equality is a congruence") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    RatFunc f = randomRatFunc(rng, R2);
    RatFunc g = randomRatFunc(rng, R2);
    Polynomial s = randomPoly(rng, R2, 2, 2, true);
    // f' = f scaled by s/s, g' = g scaled
    RatFunc f2(f.num() * s, f.den() * s);
    RatFunc g2(g.num() * s, g.den() * s);
    CHECK(ratfuncEq(f, f2));
    CHECK(ratfuncEq(g, g2));
    CHECK(ratfuncEq(f * g, f2 * g2));
    CHECK(ratfuncEq(f + g, f2 + g2));
    CHECK(ratfuncEq(f, f));
    if (ratfuncEq(f, g)) CHECK(ratfuncEq(g, f));
  }
}

TEST_CASE("laurent_split reassembles to the input") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    RatFunc f = randomRatFunc(rng, R3);
    if (f.isZero()) continue;
    auto parts = f.laurentSplit();
    RatFunc back = RatFunc::monomialPower(R3, parts.alpha) * RatFunc(parts.a, parts.b);
    CHECK(ratfuncEq(back, f));
    for (int v = 0; v < 3; ++v) {
      CHECK_FALSE(parts.a.divisibleByVariable(v));
      CHECK_FALSE(parts.b.divisibleByVariable(v));
    }
  }
}

TEST_CASE("graded fractions") {
  const Ring Z = Ring::cox(5);
  RatFunc f = parseExpression("z0*z2/(z3*z4)", Z);
  CHECK(isGraded(f));
  CHECK(gradedDegree(f) == 0);
  CHECK(gradedDegree(parseExpression("z0^3/z1", Z)) == 2);
}

TEST_CASE("multiplicity by repeated division") {
  CHECK(multiplicity(P("(x1+x2)^3*x3"), P("x1+x2")) == 3);
  CHECK(multiplicity(P("x3"), P("x1+x2")) == 0);
}

TEST_CASE("content and primitive part") {
  Polynomial p = P("4*x1 + 6*x2").scaled(Rational(1, 2));
  CHECK(p.primitivePart() == P("2*x1 + 3*x2"));
  Polynomial m = P("x1 - x2");
  CHECK((-m).primitivePart() == P("x1 - x2").scaled(Rational(-1)).primitivePart());
}
