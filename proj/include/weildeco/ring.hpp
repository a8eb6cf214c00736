#pragma once

#include "weildeco/error.hpp"

#include <string>

namespace weildeco {

// Two coordinate conventions appear throughout: affine/torus coordinates
// x1..xn and homogeneous Cox coordinates z0..zn. The convention fixes both
// the variable naming and whether parsed fractions must have homogeneous
// numerator and denominator.
enum class Coords : unsigned char { affine, cox };

struct Ring {
  Coords coords = Coords::affine;
  int vars = -1;  // -1: scalar constant, ring inferred on first use

  static Ring scalar() { return Ring{}; }
  static Ring affine(int n) { return Ring{Coords::affine, n}; }
  static Ring cox(int n) { return Ring{Coords::cox, n}; }

  bool isScalar() const { return vars < 0; }

  std::string varName(int i) const {
    if (coords == Coords::affine) return "x" + std::to_string(i + 1);
    return "z" + std::to_string(i);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    if (a.isScalar() && b.isScalar()) return true;
    return a.coords == b.coords && a.vars == b.vars;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
};

inline Ring unifyRings(const Ring& a, const Ring& b) {
  if (a.isScalar()) return b;
  if (b.isScalar()) return a;
  if (a != b)
    fail("CoordinateMismatch", "incompatible rings: " + std::to_string(a.vars) + " vs " +
                                   std::to_string(b.vars) + " variables");
  return a;
}

}  // namespace weildeco
