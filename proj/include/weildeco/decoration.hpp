#pragma once

#include "weildeco/divisor.hpp"
#include "weildeco/linalg.hpp"
#include "weildeco/sampling.hpp"
#include "weildeco/u_data.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace weildeco {

class Decoration;

struct RankOneDeco {
  WeilDivisor d;
};
struct DirectSumDeco {
  std::vector<Decoration> parts;
};
// Family of semi-norms: at each declared prime the +1 jump is triggered by
// the residue of f/g matching the stored unit; a nullopt unit declares the
// zero class (no jump ever). Undeclared primes take the plain minimum.
struct PhiDeco {
  std::vector<std::pair<PrimeDivisor, std::optional<RatFunc>>> units;
};
struct OmegaDeco {
  bool log = false;
};
struct TangentDeco {};
struct Lambda2TDeco {};
struct HMDeco {
  UData u;
};

// Evaluator family for the decoration of a reflexive sheaf: given a vector
// of the generic stalk and a prime divisor, produce the coefficient in
// Z u {+inf}. Full divisors are materialized only over declared supports.
class Decoration {
 public:
  using Variant =
      std::variant<RankOneDeco, DirectSumDeco, PhiDeco, OmegaDeco, TangentDeco, Lambda2TDeco, HMDeco>;

  static Decoration rankOne(const Fan& fan, WeilDivisor d);
  static Decoration directSum(const Fan& fan, std::vector<Decoration> parts);
  static Decoration phi(const Fan& fan,
                        std::vector<std::pair<PrimeDivisor, std::optional<RatFunc>>> units);
  static Decoration omega(const Fan& fan);
  static Decoration logOmega(const Fan& fan);
  static Decoration tangent(const Fan& fan);
  static Decoration lambda2tP4();
  static Decoration hm(const UData& u);

  const Fan& fan() const { return fan_; }
  const Variant& data() const { return v_; }
  int rank() const;
  std::string kindName() const;

 private:
  Fan fan_;
  Variant v_;
};

// Element of the generic stalk, as coordinates over the decoration's
// reference basis. Rank must match; [12],[13],[14],[23],[24],[34] for the
// second exterior power of the tangent sheaf on P4.
using VectorElem = std::vector<RatFunc>;

Ring elemRing(const VectorElem& v);
bool elemIsZero(const VectorElem& v);
VectorElem elemScale(const RatFunc& f, const VectorElem& v);
VectorElem elemAdd(const VectorElem& a, const VectorElem& b);

// min{ord(f), ord(g)} with the +1 jump exactly when the residue of f/g at P
// equals the unit h; nullopt h declares the zero class. HNotUnit when
// ord_P(h) != 0.
OrdValue seminormPhi(const std::optional<RatFunc>& h, const PrimeDivisor& p, const RatFunc& f,
                     const RatFunc& g, const Fan& fan);

OrdValue omegaCoeff(const Fan& fan, const VectorElem& m, const PrimeDivisor& p, bool log);
OrdValue tangentCoeff(const Fan& fan, const VectorElem& a, const PrimeDivisor& p);

struct TangentWitness {
  int cone = -1;
  int rayId = -1;            // minimizing ray rho*
  Eigen::VectorXi covector;  // its dual covector, the witness in M
  OrdValue value;
};
TangentWitness tangentCoeffWitness(const Fan& fan, const VectorElem& a, const PrimeDivisor& p);
// Same minimum evaluated through one fixed admissible maximal cone; the
// result does not depend on the choice (tested).
OrdValue tangentCoeffAtCone(const Fan& fan, const VectorElem& a, const PrimeDivisor& p, int cone);
std::vector<int> tangentAdmissibleCones(const Fan& fan, const PrimeDivisor& p);

// The canonical preimage a(sigma) under the ray surjection: supported on
// sigma(1) with coordinates <dual covector, a>.
std::vector<RatFunc> tangentCanonicalLift(const Fan& fan, const VectorElem& a, int cone);
// min over rays of ord(lift) + boundary correction; NotALift when the lift
// does not map to a.
OrdValue tangentLiftBound(const Fan& fan, const VectorElem& a, const std::vector<RatFunc>& lift,
                          const PrimeDivisor& p);

OrdValue lambda2tCoeff(const Fan& p4, const VectorElem& w, const PrimeDivisor& p);
OrdValue hmCoeff(const UData& u, const RatFunc& f, const RatFunc& g, const PrimeDivisor& p);

OrdValue decoCoeff(const Decoration& d, const VectorElem& v, const PrimeDivisor& p);

// ord(phi(v)) - W(v)_P, an upper bound for the coefficient of the dual
// decoration at phi; equality is attained at suitable witness vectors.
OrdValue dualBound(const Decoration& d, const VectorElem& phi, const VectorElem& v,
                   const PrimeDivisor& p);

struct CheckReport {
  bool pass = true;
  long checked = 0;
  std::string counterexample;
};

using CoeffFn = std::function<OrdValue(const VectorElem&, const PrimeDivisor&)>;
using DirectedGen = std::function<std::optional<VectorElem>(Sampler&)>;

// Property harness for (W0)-(W2) against an arbitrary coefficient
// evaluator; samples are generated first, then checked, so a fixed seed
// gives a deterministic report.
CheckReport axiomsCheckFn(int rank, const Ring& ring, const Fan& fan, const CoeffFn& fn,
                          const std::vector<PrimeDivisor>& primes, int samples, uint64_t seed,
                          const DirectedGen& directed = nullptr);
CheckReport axiomsCheck(const Decoration& d, const std::vector<PrimeDivisor>& primes, int samples,
                        uint64_t seed);

// W(v) <= W'(mu v) coefficient-wise on random samples.
CheckReport morphismCheck(const DenseMat<RatFunc>& mu, const Decoration& d, const Decoration& d2,
                          const std::vector<PrimeDivisor>& primes, int samples, uint64_t seed);

// Falsification test for P-orthogonality of a basis; `directed` injects
// coefficient patterns that trigger residue matches (off by default).
CheckReport orthogonalityCheck(const std::vector<VectorElem>& basis, const Decoration& d,
                               const PrimeDivisor& p, int samples, uint64_t seed,
                               bool directed = false);

enum class SliceKind : unsigned char { omega, tangent, hm };

struct SliceRow {
  std::string element;
  int rayId = -1;
  OrdValue b;
};
struct SliceTable {
  SliceKind kind = SliceKind::omega;
  std::string basisNote;
  std::vector<SliceRow> rows;
};

// Table of slice coefficients b_rho(e) over the canonical sample set:
// lattice points with entries in [-range, range] for the (log) differential
// and tangent slices, constant pairs for the HM slice.
SliceTable toricSliceTable(SliceKind kind, const Fan& fan, const UData* u, int range = 2);

struct FiltrationLevel {
  long level = 0;
  int dim = 0;
  std::vector<DenseVec<Rational>> basis;
  std::string note;
};
// Descending filtration E^l at the given ray, from the closed-form slice.
std::vector<FiltrationLevel> klyachkoFiltration(SliceKind kind, const Fan& fan, const UData* u,
                                                int rayId);

}  // namespace weildeco
