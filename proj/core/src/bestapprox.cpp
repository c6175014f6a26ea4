#include "atd/bestapprox.hpp"

#include <cmath>
#include <stdexcept>

#include "atd/random.hpp"

namespace atd {

double orthogonality_defect(const ConvexSet& u, const ConvexSet& v, OrthoKind kind,
                            const OrthoCheck& check) {
  if (u.dim() != v.dim()) throw std::invalid_argument("orthogonality_defect: dim mismatch");
  Rng rng(check.seed);
  double worst = 0.0;
  for (int s = 0; s < check.samples; ++s) {
    const Vec u1 = u.project(rng.point_in_cube(u.dim(), check.half_width));
    const Vec u2 = u.project(rng.point_in_cube(u.dim(), check.half_width));
    const Vec v1 = v.project(rng.point_in_cube(v.dim(), check.half_width));
    const Vec v2 = v.project(rng.point_in_cube(v.dim(), check.half_width));
    double d = 0.0;
    switch (kind) {
      case OrthoKind::set_vs_set: d = std::abs(u1.dot(v1)); break;
      case OrthoKind::diff_vs_diff: d = std::abs((u1 - u2).dot(v1 - v2)); break;
      case OrthoKind::diff_vs_set: d = std::abs((u1 - u2).dot(v1)); break;
    }
    worst = std::max(worst, d);
  }
  return worst;
}

namespace {

void require_orthogonal(const ConvexSet& u, const ConvexSet& v, OrthoKind kind,
                        const OrthoCheck& check, const char* who) {
  if (check.skip) return;
  const double defect = orthogonality_defect(u, v, kind, check);
  if (defect > check.tol) {
    throw std::invalid_argument(std::string(who) +
                                ": orthogonality guard failed (defect " +
                                std::to_string(defect) + ")");
  }
}

void require_member(const ConvexSet& s, const Vec& p, double tol, const char* who) {
  if (!s.contains(p, tol)) {
    throw std::invalid_argument(std::string(who) + ": point is not in " + s.label());
  }
}

}  // namespace

OrthogonalSum make_orthogonal_sum(ConvexSet u, ConvexSet v, const OrthoCheck& check) {
  require_orthogonal(u, v, OrthoKind::set_vs_set, check, "make_orthogonal_sum");
  return OrthogonalSum{std::move(u), std::move(v), !check.skip};
}

Vec project_orthogonal_sum(const ConvexSet& u, const ConvexSet& v, const Vec& x,
                           const OrthoCheck& check) {
  require_orthogonal(u, v, OrthoKind::set_vs_set, check, "project_orthogonal_sum");
  return u.project(x) + v.project(x);
}

Vec project_translate(const ConvexSet& s, const Vec& y, const Vec& x) {
  return y + s.project(x - y);
}

Vec project_z_plus_k(const ConvexSet& z_set, const ConvexSet& k_set, const Vec& z0,
                     const Vec& k0, const Vec& x, double tol) {
  require_member(z_set, z0, tol, "project_z_plus_k");
  require_member(k_set, k0, tol, "project_z_plus_k");
  return z_set.project(x - k0) + k_set.project(x - z0);
}

Vec project_z_plus_k_zero_in_k(const ConvexSet& z_set, const ConvexSet& k_set,
                               const Vec& z0, const Vec& x, const OrthoCheck& check,
                               double tol) {
  require_member(z_set, z0, tol, "project_z_plus_k_zero_in_k");
  require_orthogonal(z_set, k_set, OrthoKind::diff_vs_set, check,
                     "project_z_plus_k_zero_in_k");
  return z_set.project(x) + k_set.project(x - z0);
}

Vec project_z_plus_k_zero_in_z(const ConvexSet& z_set, const ConvexSet& k_set,
                               const Vec& k0, const Vec& x, const OrthoCheck& check,
                               double tol) {
  require_member(k_set, k0, tol, "project_z_plus_k_zero_in_z");
  require_orthogonal(k_set, z_set, OrthoKind::diff_vs_set, check,
                     "project_z_plus_k_zero_in_z");
  return z_set.project(x - k0) + k_set.project(x);
}

Vec shadow_projection(const DualPair& pair, const ConvexSet& z_set,
                      const ConvexSet& k_set, const Vec& k0, const Vec& x,
                      double tol) {
  require_member(k_set, k0, tol, "shadow_projection");
  const Vec z0 = z_set.project(x);  // any member of Z works as the recentering point
  const Vec pzk = z_set.project(x - k0) + k_set.project(x - z0);
  const Vec shadow = pair.a().resolvent(pzk);
  const Vec direct = z_set.project(x - k0);
  if ((shadow - direct).norm() > tol) {
    throw std::runtime_error(
        "shadow_projection: J_A P_{Z+K} disagrees with P_Z(x - k0); the pair "
        "is not paramonotone or the set descriptions are wrong");
  }
  return shadow;
}

std::pair<Vec, Vec> summerland_check(const ConvexSet& u, const ConvexSet& v,
                                     const ConvexSet& fix_t, const Vec& x) {
  const ConvexSet uv = intersect_boxes(u, v);
  return {u.project(fix_t.project(x)), uv.project(x)};
}

}  // namespace atd
