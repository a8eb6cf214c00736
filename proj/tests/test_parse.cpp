#include "weildeco/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace weildeco;

TEST_CASE("expression parsing basics") {
  const Ring R3 = Ring::affine(3);
  RatFunc v1 = parseExpression("1/(x2*x3)+1/x1", R3);
  CHECK(v1 == parseExpression("(x1 + x2*x3)/(x1*x2*x3)", R3));

  const Ring Z = Ring::cox(5);
  RatFunc h = parseExpression("z0*z2/(z3*z4)", Z);
  CHECK(h.num().totalDegree() == 2);
  CHECK(h.den().totalDegree() == 2);

  CHECK(parseExpression("x1^2 - 2*x2 + 1/3", R3) ==
        parseExpression("(3*x1^2 - 6*x2 + 1)/3", R3));
  CHECK(parseExpression("x1^-2", R3) == parseExpression("1/x1^2", R3));
  CHECK(parseExpression("-x1 - -x2", R3) == parseExpression("x2 - x1", R3));
}

TEST_CASE("parse errors carry positions") {
  const Ring R3 = Ring::affine(3);
  try {
    parseExpression("x1+", R3);
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == "SyntaxError");
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parseExpression("x4", R3), Error);
  CHECK_THROWS_AS(parseExpression("z1", R3), Error);
  CHECK_THROWS_AS(parseExpression("(x1", R3), Error);
  CHECK_THROWS_AS(parseExpression("x1 x2", R3), Error);
  CHECK_THROWS_AS(parseExpression("1/0", R3), Error);
}

TEST_CASE("projective inputs must be homogeneous") {
  const Ring Z = Ring::cox(3);
  CHECK_NOTHROW(parseExpression("(z0^2 + z1*z2)/(z0*z1)", Z));
  try {
    parseExpression("z0 + z1^2", Z);
    FAIL("expected InhomogeneousProjectiveInput");
  } catch (const Error& e) {
    CHECK(e.code() == "InhomogeneousProjectiveInput");
  }
}

TEST_CASE("print then parse is the identity on canonical forms") {
  std::mt19937_64 rng(42);
  const Ring R3 = Ring::affine(3);
  std::uniform_int_distribution<int> nt(0, 4), de(0, 3), co(-5, 5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Polynomial::Term> terms;
    const int n = nt(rng);
    for (int t = 0; t < n; ++t) {
      Exponents e(3);
      for (int j = 0; j < 3; ++j) e[j] = de(rng);
      terms.push_back({e, Rational(co(rng), 1 + de(rng))});
    }
    Polynomial num = Polynomial::fromTerms(R3, terms);
    Polynomial den = Polynomial::variable(R3, de(rng) % 3).pow(de(rng)) +
                     Polynomial::constant(R3, co(rng) == 0 ? 1 : co(rng));
    if (den.isZero()) den = Polynomial::constant(R3, 1);
    RatFunc f(num, den);
    const std::string printed = f.str();
    RatFunc reparsed = parseExpression(printed, R3);
    CHECK(reparsed == f);
    CHECK(reparsed.str() == printed);
  }
}
