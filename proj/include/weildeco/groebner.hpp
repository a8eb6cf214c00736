#pragma once

#include "weildeco/linalg.hpp"
#include "weildeco/polynomial.hpp"
#include "weildeco/rational_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weildeco {

// Element of a free module R^g over the polynomial ring.
struct FreeVector {
  std::vector<Polynomial> c;

  FreeVector() = default;
  explicit FreeVector(std::vector<Polynomial> comps) : c(std::move(comps)) {}
  static FreeVector zero(const Ring& ring, int rank);
  static FreeVector unit(const Ring& ring, int rank, int comp);

  int rank() const { return static_cast<int>(c.size()); }
  bool isZero() const;
  Ring ring() const;

  FreeVector operator-() const;
  FreeVector& operator+=(const FreeVector& rhs);
  FreeVector& operator-=(const FreeVector& rhs);
  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
  FreeVector scaled(const Polynomial& f) const;
  FreeVector scaled(const Rational& q) const;
  friend bool operator==(const FreeVector& a, const FreeVector& b);

  // joint coefficient content, sign fixed by the first nonzero component
  FreeVector primitive() const;
  std::string str() const;
};

enum class BaseOrder : unsigned char { grevlex, lex };
enum class PositionRule : unsigned char { positionOverTerm, termOverPosition };

struct ModuleOrder {
  BaseOrder base = BaseOrder::grevlex;
  PositionRule rule = PositionRule::positionOverTerm;
  std::vector<int> priority;  // permutation of components; empty = identity

  int prio(int comp) const {
    return priority.empty() ? comp : priority[static_cast<std::size_t>(comp)];
  }
  friend bool operator==(const ModuleOrder& a, const ModuleOrder& b) {
    return a.base == b.base && a.rule == b.rule && a.priority == b.priority;
  }
};

struct ModuleTerm {
  int comp = -1;
  Exponents e;
  Rational coeff;
};

// true if (c1,e1) > (c2,e2) under the order
bool termGreater(const ModuleOrder& order, int c1, const Exponents& e1, int c2,
                 const Exponents& e2);
// leading module term of a nonzero vector
ModuleTerm leadingModuleTerm(const FreeVector& v, const ModuleOrder& order);

// Submodule of R^rank given by generators, with optional cached Groebner
// basis (reduced, monic, canonically sorted) and syzygy data.
struct Submodule {
  Ring ring;
  int rank = 0;
  std::vector<FreeVector> gens;
  std::optional<ModuleOrder> gbOrder;
  std::vector<FreeVector> gb;

  bool hasGB() const { return gbOrder.has_value(); }
};

Submodule makeSubmodule(const Ring& ring, int rank, std::vector<FreeVector> gens);
// Construction with an externally supplied basis: mutual membership of
// generators and basis is verified.
Submodule makeSubmoduleWithBasis(const Ring& ring, int rank, std::vector<FreeVector> gens,
                                 std::vector<FreeVector> gb, const ModuleOrder& order);

// Buchberger completion; result carries the unique reduced monic basis.
Submodule buchberger(const Submodule& m, const ModuleOrder& order = ModuleOrder{});
void ensureGroebner(Submodule& m, const ModuleOrder& order = ModuleOrder{});

// Remainder of the division algorithm; requires a basis cached under the
// same order (OrderMismatch otherwise). Membership test: remainder == 0.
FreeVector normalForm(const FreeVector& v, const Submodule& m,
                      const ModuleOrder& order = ModuleOrder{});
bool isMember(const FreeVector& v, Submodule& m);

struct Presentation {
  Ring ring;
  int genCount = 0;
  std::vector<FreeVector> syzygies;  // vectors in R^genCount
};

// Generating set of all relations among the generators of m.
Presentation syzygies(const Submodule& m);

// {v : T v = 0} for a polynomial matrix given by its columns in R^rows.
Submodule kernelOfMatrix(const Ring& ring, int rows, const std::vector<FreeVector>& columns);

Submodule intersectModules(const Submodule& a, const Submodule& b);
// (m : f^inf) by iterated module quotient; throws ZeroDivisorInput /
// IterationCap.
Submodule saturate(const Submodule& m, const Polynomial& f, int iterationCap = 64);
bool equalModules(const Submodule& a, const Submodule& b);

// Greedy minimal generating set (drops generators lying in the span of the
// remaining ones), deterministic.
std::vector<FreeVector> minimalGenerators(const Submodule& m);

struct FreenessProbe {
  int evaluatedRank = 0;
  int moduleGenericRank = 0;
  bool obstruction = false;  // true: not locally free at the point
};
FreenessProbe localFreenessProbe(const Presentation& p, const std::vector<Rational>& point);

}  // namespace weildeco
