#pragma once

#include "weildeco/divisor.hpp"
#include "weildeco/fan.hpp"
#include "weildeco/rational_function.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace weildeco {

// Defining data of a rank-two sheaf of Horrocks-Mumford type: one lattice
// character per ray, orthogonal to its ray. On affine(n) and projective(n)
// this is conveniently a square integer matrix with vanishing diagonal
// (rows additionally summing to zero in the projective case).
struct UData {
  Fan fan;
  std::vector<Eigen::VectorXi> assign;     // per ray id: u_rho in M = Z^dim
  std::optional<Eigen::MatrixXi> matrix;   // convenience form when available

  static UData zero(const Fan& fan);
  static UData fromAssignments(const Fan& fan, std::vector<Eigen::VectorXi> assign);
  static UData fromAffineMatrix(const Eigen::MatrixXi& u);      // builds affine(n)
  static UData fromProjectiveMatrix(const Eigen::MatrixXi& u);  // builds projective(n)
  // The 5x5 matrix of the classical Horrocks-Mumford bundle on P4.
  static UData classical();

  int n() const { return fan.dim; }
  const Eigen::VectorXi& rayCharacter(int rayId) const { return assign[rayId]; }
  bool isZero() const;

  // x^{u_rho} as a rational function: a Laurent monomial in torus
  // coordinates, or the corresponding degree-zero monomial fraction in Cox
  // coordinates of projective space.
  RatFunc rayUnit(int rayId, Coords coords) const;

  std::string str() const;
};

struct UValidation {
  bool ok = true;
  std::vector<std::string> problems;
};

UValidation validateU(const UData& u);
Eigen::MatrixXi classicalMatrix();

}  // namespace weildeco
