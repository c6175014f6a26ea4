#include "atd/operator.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "atd/random.hpp"

namespace atd {

bool is_finite(const Vec& v) { return v.allFinite(); }

namespace {

void require_dim(Eigen::Index expected, const Vec& x, const char* who) {
  if (x.size() != expected) {
    throw std::invalid_argument(std::string(who) + ": expected dimension " +
                                std::to_string(expected) + ", got " +
                                std::to_string(x.size()));
  }
}

}  // namespace

ResolventOperator::ResolventOperator(Eigen::Index dim, Map resolvent,
                                     bool paramonotone, std::string label)
    : dim_(dim),
      map_(std::move(resolvent)),
      paramonotone_(paramonotone),
      label_(std::move(label)) {
  if (dim_ <= 0) throw std::invalid_argument("ResolventOperator: dim must be positive");
  if (!map_) throw std::invalid_argument("ResolventOperator: empty resolvent map");
#ifndef NDEBUG
  // Cheap construction-time guard against non-monotone user maps; full
  // sampling lives in the verification suites.
  assert(firm_nonexpansiveness_defect(*this, 8, 0x5eedULL) <= 1e-8);
#endif
}

Vec ResolventOperator::resolvent(const Vec& x) const {
  require_dim(dim_, x, "resolvent");
  return map_(x);
}

Vec ResolventOperator::reflected_resolvent(const Vec& x) const {
  require_dim(dim_, x, "reflected_resolvent");
  return 2.0 * map_(x) - x;
}

Vec ResolventOperator::scaled_resolvent(double alpha, const Vec& x) const {
  require_dim(dim_, x, "scaled_resolvent");
  if (alpha <= 0.0) throw std::invalid_argument("scaled_resolvent: alpha must be positive");
  if (!scaled_) {
    throw std::logic_error("scaled_resolvent: operator '" + label_ +
                           "' has no closed-form scaled resolvent");
  }
  return scaled_(alpha, x);
}

ResolventOperator inverse(const ResolventOperator& a) {
  // Inverse resolvent identity: J_A + J_{A^{-1}} = Id.
  return ResolventOperator(
      a.dim(), [a](const Vec& x) -> Vec { return x - a.resolvent(x); },
      a.paramonotone(), "inv(" + a.label() + ")");
}

ResolventOperator ovee(const ResolventOperator& a) {
  // J_{A^v} = (-Id) o J_A o (-Id).
  return ResolventOperator(
      a.dim(), [a](const Vec& x) -> Vec { return -a.resolvent(-x); },
      a.paramonotone(), "ovee(" + a.label() + ")");
}

ResolventOperator neg_ovee_inverse(const ResolventOperator& a) {
  // A^{-v} = (A^{-1})^v = (A^v)^{-1}; both routes collapse to Id + J_A(-.).
  return ResolventOperator(
      a.dim(), [a](const Vec& x) -> Vec { return x + a.resolvent(-x); },
      a.paramonotone(), "negovee(" + a.label() + ")");
}

bool graph_contains(const ResolventOperator& a, const Vec& x, const Vec& u,
                    double tol) {
  require_dim(a.dim(), x, "graph_contains");
  require_dim(a.dim(), u, "graph_contains");
  if (!(tol > 0.0)) throw std::invalid_argument("graph_contains: tol must be positive");
  return (a.resolvent(x + u) - x).norm() <= tol;
}

std::pair<Vec, Vec> minty_param(const ResolventOperator& a, const Vec& x) {
  Vec jx = a.resolvent(x);
  return {jx, x - jx};
}

bool is_paramonotone_linear(const Mat& m, double tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_paramonotone_linear: matrix must be square");
  }
  const Mat sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> eig(sym);
  const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  if (eig.eigenvalues().minCoeff() < -tol * scale) {
    throw std::invalid_argument(
        "is_paramonotone_linear: matrix is not monotone (symmetric part "
        "has a negative eigenvalue)");
  }
  // ker(M_+) spanned by eigenvectors with (numerically) zero eigenvalue.
  bool para = true;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (std::abs(eig.eigenvalues()[i]) <= tol * scale) {
      const Vec v = eig.eigenvectors().col(i);
      if ((m * v).norm() > tol * scale) {
        para = false;
        break;
      }
    }
  }
  return para;
}

double firm_nonexpansiveness_defect(const ResolventOperator& a, int samples,
                                    std::uint64_t seed, double half_width) {
  Rng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const Vec x = rng.point_in_cube(a.dim(), half_width);
    const Vec y = rng.point_in_cube(a.dim(), half_width);
    const Vec jx = a.resolvent(x);
    const Vec jy = a.resolvent(y);
    const double lhs = (jx - jy).squaredNorm();
    const double rhs = (x - y).dot(jx - jy);
    worst = std::max(worst, lhs - rhs);
  }
  return worst;
}

}  // namespace atd
