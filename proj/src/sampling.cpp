#include "weildeco/sampling.hpp"

namespace weildeco {

int Sampler::uniform(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng_);
}

Rational Sampler::coefficient() {
  int num = uniform(-4, 4);
  if (num == 0) num = 1;
  const int den = uniform(1, 3);
  return Rational(num, den);
}

Polynomial Sampler::homogeneousPolynomial(int maxTerms, int deg, bool nonzero) {
  const int n = ring_.vars;
  std::vector<Polynomial::Term> terms;
  const int count = uniform(nonzero ? 1 : 0, maxTerms);
  for (int t = 0; t < count; ++t) {
    Exponents e = Exponents::Zero(n);
    for (int d = 0; d < deg; ++d) e[uniform(0, n - 1)] += 1;
    terms.push_back({e, coefficient()});
  }
  Polynomial p = Polynomial::fromTerms(ring_, terms);
  if (nonzero && p.isZero()) {
    Exponents e = Exponents::Zero(n);
    if (deg > 0) e[0] = deg;
    return Polynomial::monomial(ring_, e);
  }
  return p;
}

Polynomial Sampler::polynomial(int maxTerms, int maxDeg, bool nonzero) {
  if (ring_.coords == Coords::cox) return homogeneousPolynomial(maxTerms, uniform(0, maxDeg), nonzero);
  const int n = ring_.vars;
  std::vector<Polynomial::Term> terms;
  const int count = uniform(nonzero ? 1 : 0, maxTerms);
  for (int t = 0; t < count; ++t) {
    Exponents e(n);
    for (int j = 0; j < n; ++j) e[j] = uniform(0, maxDeg);
    terms.push_back({e, coefficient()});
  }
  Polynomial p = Polynomial::fromTerms(ring_, terms);
  if (nonzero && p.isZero()) return Polynomial::constant(ring_, 1);
  return p;
}

RatFunc Sampler::laurentMonomial(int maxDeg) {
  const int n = ring_.vars;
  Exponents e(n);
  for (int j = 0; j < n; ++j) e[j] = uniform(-maxDeg, maxDeg);
  if (ring_.coords == Coords::cox) {
    // balance to total degree zero
    int total = e.sum();
    while (total > 0) {
      e[uniform(0, n - 1)] -= 1;
      --total;
    }
    while (total < 0) {
      e[uniform(0, n - 1)] += 1;
      ++total;
    }
  }
  return RatFunc::monomialPower(ring_, e) * RatFunc(coefficient());
}

RatFunc Sampler::scalar() {
  if (uniform(0, 3) != 0) return laurentMonomial(2);
  if (ring_.coords == Coords::cox) {
    const int d = uniform(1, 2);
    Polynomial num = homogeneousPolynomial(2, d, true);
    Polynomial den = homogeneousPolynomial(1, d, true);
    return RatFunc(num, den);
  }
  Polynomial num = polynomial(2, 2, true);
  Polynomial den = polynomial(1, 1, true);
  return RatFunc(num, den);
}

RatFunc Sampler::fieldElement() {
  if (uniform(0, 5) == 0) return RatFunc();
  RatFunc f = scalar();
  if (uniform(0, 1)) f += laurentMonomial(1);
  if (ring_.coords == Coords::cox && !f.isZero() && !isGraded(f)) return laurentMonomial(2);
  return f;
}

std::vector<RatFunc> Sampler::elementCoords(int rank, bool allowZero) {
  std::vector<RatFunc> coords;
  coords.reserve(static_cast<std::size_t>(rank));
  bool nonzero = false;
  for (int i = 0; i < rank; ++i) {
    RatFunc f = fieldElement();
    nonzero = nonzero || !f.isZero();
    coords.push_back(std::move(f));
  }
  if (!allowZero && !nonzero) coords[0] = laurentMonomial(1);
  return coords;
}

}  // namespace weildeco
