#include "weildeco/u_data.hpp"

#include <sstream>

namespace weildeco {

UData UData::zero(const Fan& fan) {
  UData u;
  u.fan = fan;
  u.assign.assign(fan.rays.size(), Eigen::VectorXi::Zero(fan.dim));
  if (fan.isAffineSpace() || fan.isProjectiveSpace()) {
    const int k = fan.isAffineSpace() ? fan.dim : fan.dim + 1;
    u.matrix = Eigen::MatrixXi::Zero(k, k);
  }
  return u;
}

UData UData::fromAssignments(const Fan& fan, std::vector<Eigen::VectorXi> assign) {
  if (static_cast<int>(assign.size()) != fan.rayCount())
    fail("InvalidU", "one character per ray required");
  UData u;
  u.fan = fan;
  u.assign = std::move(assign);
  for (const auto& m : u.assign)
    if (m.size() != fan.dim) fail("InvalidU", "character dimension mismatch");
  return u;
}

UData UData::fromAffineMatrix(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols() || m.rows() == 0) fail("InvalidU", "matrix must be square");
  const int n = static_cast<int>(m.rows());
  UData u;
  u.fan = builtinFan("affine(" + std::to_string(n) + ")");
  for (int i = 0; i < n; ++i) u.assign.push_back(m.row(i).transpose());
  u.matrix = m;
  return u;
}

UData UData::fromProjectiveMatrix(const Eigen::MatrixXi& m) {
  if (m.rows() != m.cols() || m.rows() < 2) fail("InvalidU", "matrix must be square");
  const int n = static_cast<int>(m.rows()) - 1;
  UData u;
  u.fan = builtinFan("projective(" + std::to_string(n) + ")");
  // row nu describes u(H_nu) in the divisor basis H_0..H_n; the underlying
  // character is the part over H_1..H_n
  u.assign.resize(u.fan.rays.size());
  for (int ray = 0; ray < u.fan.rayCount(); ++ray) {
    const int nu = u.fan.varSlot(ray);
    u.assign[ray] = m.row(nu).segment(1, n).transpose();
  }
  u.matrix = m;
  return u;
}

Eigen::MatrixXi classicalMatrix() {
  Eigen::MatrixXi m(5, 5);
  // u(H_nu) = H_{nu+1} + H_{nu-1} - H_{nu+2} - H_{nu-2}, indices mod 5
  m.setZero();
  for (int nu = 0; nu < 5; ++nu) {
    m(nu, (nu + 1) % 5) += 1;
    m(nu, (nu + 4) % 5) += 1;
    m(nu, (nu + 2) % 5) -= 1;
    m(nu, (nu + 3) % 5) -= 1;
  }
  return m;
}

UData UData::classical() { return fromProjectiveMatrix(classicalMatrix()); }

bool UData::isZero() const {
  for (const auto& m : assign)
    if (!m.isZero()) return false;
  return true;
}

RatFunc UData::rayUnit(int rayId, Coords coords) const {
  const Eigen::VectorXi& m = assign[rayId];
  if (coords == Coords::affine) return RatFunc::monomialPower(fan.torusRing(), m);
  if (!fan.isProjectiveSpace())
    fail("CoordinateMismatch", "cox-coordinate characters need projective space");
  // z^{iota(m)}: exponent of z_nu is <m, ray_nu>
  Eigen::VectorXi e(fan.dim + 1);
  for (const Ray& r : fan.rays) e[fan.varSlot(r.id)] = m.dot(r.v);
  return RatFunc::monomialPower(fan.coxRing(), e);
}

std::string UData::str() const {
  std::ostringstream out;
  if (matrix) {
    out << "[";
    for (int i = 0; i < matrix->rows(); ++i) {
      if (i) out << ", ";
      out << "[";
      for (int j = 0; j < matrix->cols(); ++j) {
        if (j) out << ", ";
        out << (*matrix)(i, j);
      }
      out << "]";
    }
    out << "]";
    return out.str();
  }
  out << "{";
  for (std::size_t i = 0; i < assign.size(); ++i) {
    if (i) out << ", ";
    out << fan.divisorName(static_cast<int>(i)) << " -> [";
    for (int j = 0; j < assign[i].size(); ++j) {
      if (j) out << ", ";
      out << assign[i][j];
    }
    out << "]";
  }
  out << "}";
  return out.str();
}

UValidation validateU(const UData& u) {
  UValidation rep;
  auto bad = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.problems.push_back(msg);
  };
  if (static_cast<int>(u.assign.size()) != u.fan.rayCount()) {
    bad("one character per ray required");
    return rep;
  }
  for (const Ray& r : u.fan.rays) {
    if (u.assign[r.id].size() != u.fan.dim) {
      bad("character for " + u.fan.divisorName(r.id) + " has wrong dimension");
      continue;
    }
    const int pairing = u.assign[r.id].dot(r.v);
    if (pairing != 0)
      bad("orthogonality fails at " + u.fan.divisorName(r.id) + ": <u_rho, rho> = " +
          std::to_string(pairing));
  }
  if (u.matrix) {
    const Eigen::MatrixXi& m = *u.matrix;
    for (int i = 0; i < m.rows(); ++i) {
      if (m(i, i) != 0) bad("matrix diagonal entry " + std::to_string(i) + " is nonzero");
      if (u.fan.isProjectiveSpace() && m.row(i).sum() != 0)
        bad("matrix row " + std::to_string(i) + " does not sum to zero");
    }
  }
  return rep;
}

}  // namespace weildeco
