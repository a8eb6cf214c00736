#include "weildeco/fan.hpp"

#include "weildeco/linalg.hpp"

#include <numeric>

namespace weildeco {

const Ray& Fan::ray(int id) const {
  if (id < 0 || id >= rayCount()) fail("IndexOutOfRange", "ray id " + std::to_string(id));
  return rays[id];
}

bool Fan::isAffineSpace() const { return name.rfind("affine(", 0) == 0; }
bool Fan::isProjectiveSpace() const { return name.rfind("projective(", 0) == 0; }

int Fan::varSlot(int rayId) const {
  if (isProjectiveSpace()) return rayId < dim ? rayId + 1 : 0;  // rays e_1..e_n, then -sum
  return rayId;
}

int Fan::rayIdOfVar(int slot) const {
  if (isProjectiveSpace()) return slot == 0 ? dim : slot - 1;
  return slot;
}

std::string Fan::divisorName(int rayId) const {
  if (isProjectiveSpace()) return "H" + std::to_string(varSlot(rayId));
  if (isAffineSpace()) return "H" + std::to_string(rayId + 1);
  return "D" + std::to_string(rayId);
}

std::vector<int> Fan::conesContaining(int rayId) const {
  std::vector<int> out;
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (int r : cones[c])
      if (r == rayId) {
        out.push_back(static_cast<int>(c));
        break;
      }
  return out;
}

Ring Fan::coxRing() const {
  if (!isProjectiveSpace()) fail("CoordinateMismatch", "cox ring only for projective space fans");
  return Ring::cox(dim + 1);
}

namespace {

int vectorGcd(const Eigen::VectorXi& v) {
  int g = 0;
  for (int i = 0; i < v.size(); ++i) g = std::gcd(g, std::abs(v[i]));
  return g;
}

DenseMat<Rational> rayMatrix(const Fan& fan, const std::vector<int>& rayIds) {
  DenseMat<Rational> m(fan.dim, static_cast<Eigen::Index>(rayIds.size()));
  for (std::size_t j = 0; j < rayIds.size(); ++j)
    for (int i = 0; i < fan.dim; ++i) m(i, static_cast<Eigen::Index>(j)) = fan.ray(rayIds[j]).v[i];
  return m;
}

}  // namespace

FanValidation validateFan(const Fan& fan) {
  FanValidation rep;
  auto bad = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.problems.push_back(msg);
  };
  if (fan.dim <= 0) bad("dimension must be positive");
  for (const Ray& r : fan.rays) {
    if (r.v.size() != fan.dim) {
      bad("ray " + std::to_string(r.id) + " has wrong dimension");
      continue;
    }
    const int g = vectorGcd(r.v);
    if (g == 0) bad("ray " + std::to_string(r.id) + " is zero");
    else if (g != 1) bad("ray " + std::to_string(r.id) + " is not primitive");
  }
  for (int i = 0; i < fan.rayCount(); ++i)
    for (int j = i + 1; j < fan.rayCount(); ++j)
      if (fan.rays[i].v.size() == fan.rays[j].v.size() && fan.rays[i].v == fan.rays[j].v)
        bad("rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  if (!rep.ok) return rep;

  std::vector<int> all(fan.rayCount());
  std::iota(all.begin(), all.end(), 0);
  if (fan.rayCount() == 0 || exactRank<Rational>(rayMatrix(fan, all)) != fan.dim)
    bad("rays do not span the ambient space");

  std::vector<bool> covered(fan.rayCount(), false);
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& cone = fan.cones[c];
    if (static_cast<int>(cone.size()) != fan.dim) {
      bad("cone " + std::to_string(c) + " is not full-dimensional");
      continue;
    }
    bool conesOk = true;
    for (int r : cone) {
      if (r < 0 || r >= fan.rayCount()) {
        bad("cone " + std::to_string(c) + " references unknown ray");
        conesOk = false;
        break;
      }
      covered[r] = true;
    }
    if (!conesOk) continue;
    const Rational det = exactDet<Rational>(rayMatrix(fan, cone));
    if (det != 1 && det != -1)
      bad("cone " + std::to_string(c) + " is not smooth (|det| = " +
          toString(det < 0 ? Rational(-det) : det) + ")");
  }
  for (int r = 0; r < fan.rayCount(); ++r)
    if (!covered[r]) bad("ray " + std::to_string(r) + " lies in no maximal cone");
  return rep;
}

Fan builtinFan(const std::string& name) {
  auto make = [](int dim, std::vector<Eigen::VectorXi> rays,
                 std::vector<std::vector<int>> cones, std::string tag) {
    Fan f;
    f.dim = dim;
    for (std::size_t i = 0; i < rays.size(); ++i)
      f.rays.push_back(Ray{static_cast<int>(i), rays[i]});
    f.cones = std::move(cones);
    f.name = std::move(tag);
    return f;
  };
  auto parseArg = [&name](const std::string& prefix) -> int {
    if (name.rfind(prefix + "(", 0) == 0 && name.back() == ')')
      return std::stoi(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    return -1;
  };

  int n = -1;
  std::string kind;
  if ((n = parseArg("affine")) > 0) kind = "affine";
  else if ((n = parseArg("projective")) > 0) kind = "projective";
  else if ((n = parseArg("plines")) > 0) kind = "plines";
  else if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'P') &&
           std::isdigit(static_cast<unsigned char>(name[1]))) {
    n = std::stoi(name.substr(1));
    kind = name[0] == 'A' ? "affine" : "projective";
  }
  if (n <= 0) fail("UnknownName", "unknown builtin fan '" + name + "'");

  std::vector<Eigen::VectorXi> rays;
  auto unit = [n](int i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e[i] = 1;
    return e;
  };

  if (kind == "affine") {
    std::vector<int> cone(n);
    for (int i = 0; i < n; ++i) {
      rays.push_back(unit(i));
      cone[i] = i;
    }
    return make(n, rays, {cone}, "affine(" + std::to_string(n) + ")");
  }
  if (kind == "projective") {
    for (int i = 0; i < n; ++i) rays.push_back(unit(i));
    Eigen::VectorXi minus = Eigen::VectorXi::Constant(n, -1);
    rays.push_back(minus);
    std::vector<std::vector<int>> cones;
    for (int skip = 0; skip <= n; ++skip) {
      std::vector<int> cone;
      for (int r = 0; r <= n; ++r)
        if (r != skip) cone.push_back(r);
      cones.push_back(cone);
    }
    return make(n, rays, cones, "projective(" + std::to_string(n) + ")");
  }
  // plines(n): (P^1)^n, rays +-e_i, one cone per sign pattern
  for (int i = 0; i < n; ++i) {
    rays.push_back(unit(i));
    rays.push_back(-unit(i));
  }
  std::vector<std::vector<int>> cones;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> cone;
    for (int i = 0; i < n; ++i) cone.push_back(2 * i + ((mask >> i) & 1));
    cones.push_back(cone);
  }
  return make(n, rays, cones, "plines(" + std::to_string(n) + ")");
}

std::vector<DualCovector> dualBasis(const Fan& fan, int cone) {
  if (cone < 0 || cone >= static_cast<int>(fan.cones.size()))
    fail("IndexOutOfRange", "cone index " + std::to_string(cone));
  const auto& rayIds = fan.cones[cone];
  if (static_cast<int>(rayIds.size()) != fan.dim)
    fail("NotSmooth", "cone is not full-dimensional");
  DenseMat<Rational> m(fan.dim, fan.dim);
  for (int j = 0; j < fan.dim; ++j)
    for (int i = 0; i < fan.dim; ++i) m(i, j) = fan.ray(rayIds[j]).v[i];
  const Rational det = exactDet<Rational>(m);
  if (det != 1 && det != -1) fail("NotSmooth", "cone determinant is not +-1");

  // Rows of the inverse of the ray matrix form the dual basis.
  DenseMat<Rational> aug(fan.dim, 2 * fan.dim);
  aug.block(0, 0, fan.dim, fan.dim) = m;
  for (int i = 0; i < fan.dim; ++i)
    for (int j = 0; j < fan.dim; ++j) aug(i, fan.dim + j) = i == j ? 1 : 0;
  detail::echelonize(aug);
  std::vector<DualCovector> duals;
  for (int j = 0; j < fan.dim; ++j) {
    Eigen::VectorXi mvec(fan.dim);
    for (int i = 0; i < fan.dim; ++i) {
      const Rational q = aug(j, fan.dim + i);
      if (denominator(q) != 1) fail("NotSmooth", "dual basis is not integral");
      mvec[i] = static_cast<int>(numerator(q));
    }
    duals.push_back(DualCovector{cone, rayIds[j], mvec});
  }
  return duals;
}

}  // namespace weildeco
