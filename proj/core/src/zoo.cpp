#include "atd/zoo.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include <Eigen/Dense>

namespace atd {

ResolventOperator normal_cone_operator(const ConvexSet& s) {
  ResolventOperator op(
      s.dim(), [s](const Vec& x) -> Vec { return s.project(x); },
      /*paramonotone=*/true, "N[" + s.label() + "]");
  // J_{alpha N_S} = P_S for every alpha > 0.
  op.set_scaled_resolvent([s](double, const Vec& x) -> Vec { return s.project(x); });
  return op;
}

ResolventOperator linear_operator(const Mat& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("linear_operator: matrix must be square");
  const bool para = is_paramonotone_linear(m, tol);  // throws if not monotone
  const Eigen::Index n = m.rows();
  auto lu = std::make_shared<Eigen::PartialPivLU<Mat>>(Mat::Identity(n, n) + m);
  ResolventOperator op(n, [lu](const Vec& x) -> Vec { return lu->solve(x); }, para,
                       "linear");
  auto mat = std::make_shared<Mat>(m);
  op.set_scaled_resolvent([mat, n](double alpha, const Vec& x) -> Vec {
    return (Mat::Identity(n, n) + alpha * (*mat)).partialPivLu().solve(x);
  });
  return op;
}

ResolventOperator rotator_operator(double theta) {
  Mat m(2, 2);
  m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  // Rotation matrices: x -> Mx rotates by theta; stored exactly for the
  // quarter turns used by the fixtures.
  if (theta == M_PI_2) m << 0, -1, 1, 0;
  if (theta == -M_PI_2) m << 0, 1, -1, 0;
  return linear_operator(m);
}

ResolventOperator constant_operator(const Vec& u) {
  Vec uu = u;
  ResolventOperator op(
      u.size(), [uu](const Vec& x) -> Vec { return x - uu; },
      /*paramonotone=*/true, "const");
  op.set_scaled_resolvent(
      [uu](double alpha, const Vec& x) -> Vec { return x - alpha * uu; });
  return op;
}

ResolventOperator prox_operator(const ProxFunction& f) {
  ResolventOperator op(
      f.dim(), [f](const Vec& x) -> Vec { return f.prox(x, 1.0); },
      /*paramonotone=*/true, "d[" + f.label() + "]");
  op.set_scaled_resolvent(
      [f](double alpha, const Vec& x) -> Vec { return f.prox(x, alpha); });
  return op;
}

ResolventOperator skew_plus_normal_cone_ww() {
  return ResolventOperator(
      2,
      [](const Vec& x) -> Vec {
        Vec z(2);
        if (x[1] > x[0]) {
          z[0] = 0.5 * (x[0] + x[1]);
          z[1] = 0.5 * (x[1] - x[0]);
        } else {
          z[0] = x[0];
          z[1] = 0.0;
        }
        return z;
      },
      /*paramonotone=*/false, "N[halfplane]+rot(pi/2)");
}

ResolventOperator composed_lcl(const ResolventOperator& c, const Mat& l, double tol) {
  if (l.rows() != c.dim()) {
    throw std::invalid_argument("composed_lcl: L must map into the domain of C");
  }
  const Eigen::Index p = l.rows();
  const Mat gram = l * l.transpose();
  const double alpha = gram.trace() / static_cast<double>(p);
  if (!(alpha > 0.0) ||
      (gram - alpha * Mat::Identity(p, p)).lpNorm<Eigen::Infinity>() > tol) {
    throw std::invalid_argument(
        "composed_lcl: L L^T must equal alpha * Id with alpha > 0");
  }
  if (std::abs(alpha - 1.0) > tol && !c.has_scaled_resolvent()) {
    throw std::invalid_argument(
        "composed_lcl: C needs a closed-form scaled resolvent when alpha != 1");
  }
  const bool scaled = std::abs(alpha - 1.0) > tol;
  Mat ll = l;
  return ResolventOperator(
      l.cols(),
      [c, ll, alpha, scaled](const Vec& x) -> Vec {
        const Vec lx = ll * x;
        const Vec j = scaled ? c.scaled_resolvent(alpha, lx) : c.resolvent(lx);
        return x + (1.0 / alpha) * (ll.transpose() * (j - lx));
      },
      c.paramonotone(), "L*[" + c.label() + "]L");
}

}  // namespace atd
