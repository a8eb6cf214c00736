#pragma once

#include "weildeco/polynomial.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace weildeco {

struct Ray {
  int id;             // position in Fan::rays
  Eigen::VectorXi v;  // primitive generator
};

// A smooth fan given by its rays and full-dimensional cones. Rays are
// identified with their primitive generators.
struct Fan {
  int dim = 0;
  std::vector<Ray> rays;
  std::vector<std::vector<int>> cones;  // ray ids, one list per maximal cone
  std::string name = "custom";

  int rayCount() const { return static_cast<int>(rays.size()); }
  const Ray& ray(int id) const;

  bool isAffineSpace() const;   // single smooth cone spanning Z^n
  bool isProjectiveSpace() const;

  // Cox variable slot of a toric divisor (projective fans only; for affine
  // fans the slot of ray e_i is i). Inverse of rayIdOfVar.
  int varSlot(int rayId) const;
  int rayIdOfVar(int slot) const;

  std::string divisorName(int rayId) const;  // H1.. / H0.. / D<id>
  std::vector<int> conesContaining(int rayId) const;

  // Ring in which rational functions on this variety are written: torus
  // coordinates x1..xn; projective fans alternatively use cox(n+1).
  Ring torusRing() const { return Ring::affine(dim); }
  Ring coxRing() const;  // projective fans only
};

struct FanValidation {
  bool ok = true;
  std::vector<std::string> problems;
};

FanValidation validateFan(const Fan& fan);

// affine(n) | projective(n) | plines(n), plus short aliases An / Pn / P1^n.
Fan builtinFan(const std::string& name);

struct DualCovector {
  int cone;   // index into Fan::cones
  int rayId;  // ray of that cone
  Eigen::VectorXi m;  // <m, ray'> = delta for all rays of the cone
};

// Dual basis of a smooth maximal cone; throws NotSmooth.
std::vector<DualCovector> dualBasis(const Fan& fan, int cone);

}  // namespace weildeco
