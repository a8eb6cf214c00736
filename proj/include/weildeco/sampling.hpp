#pragma once

#include "weildeco/fan.hpp"
#include "weildeco/rational_function.hpp"

#include <random>
#include <vector>

namespace weildeco {

// Deterministic random generators for the property-test harnesses. All
// draws depend only on the seed and the call sequence; the harnesses
// generate first and evaluate afterwards, so a fixed seed yields
// byte-identical reports.
class Sampler {
 public:
  Sampler(uint64_t seed, Ring ring) : rng_(seed), ring_(ring) {}

  std::mt19937_64& rng() { return rng_; }
  const Ring& ring() const { return ring_; }

  int uniform(int lo, int hi);
  Rational coefficient();  // small nonzero rational

  // Sparse polynomial; on Cox rings all terms share one total degree.
  Polynomial polynomial(int maxTerms, int maxDeg, bool nonzero);
  // Laurent monomial x^m with entries in [-maxDeg, maxDeg] (degree-zero
  // monomial fraction on Cox rings).
  RatFunc laurentMonomial(int maxDeg);
  // Monomial-rich scalar: mostly Laurent monomials, occasionally a proper
  // fraction; never zero.
  RatFunc scalar();
  // General element of the function field (possibly zero).
  RatFunc fieldElement();

  std::vector<RatFunc> elementCoords(int rank, bool allowZero = true);

 private:
  std::mt19937_64 rng_;
  Ring ring_;

  Polynomial homogeneousPolynomial(int maxTerms, int deg, bool nonzero);
};

}  // namespace weildeco
