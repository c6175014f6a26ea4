#include "atd/duality.hpp"

#include <cmath>
#include <stdexcept>

namespace atd {

DualPair::DualPair(ResolventOperator a, ResolventOperator b)
    : a_(std::move(a)),
      b_(std::move(b)),
      dual_a_(inverse(a_)),
      dual_b_(neg_ovee_inverse(b_)) {
  if (a_.dim() != b_.dim()) {
    throw std::invalid_argument("DualPair: operators must share a dimension");
  }
}

bool kz_contains(const DualPair& p, const Vec& z, const Vec& k, double tol) {
  return graph_contains(p.a(), z, k, tol) && graph_contains(p.b(), z, -k, tol);
}

bool zk_contains(const DualPair& p, const Vec& k, const Vec& z, double tol) {
  // z in A^{-1}k and -z in B^{-v}k, through the dual operators' graphs.
  return graph_contains(p.dual_a(), k, z, tol) &&
         graph_contains(p.dual_b(), k, -z, tol);
}

bool z_contains(const DualPair& p, const Vec& z, const Vec& k_witness, double tol) {
  return kz_contains(p, z, k_witness, tol);
}

Ternary z_contains(const DualPair& p, const Vec& z, double tol) {
  if (kz_contains(p, z, Vec::Zero(p.dim()), tol)) return Ternary::yes;
  return Ternary::undecidable;
}

bool k_contains(const DualPair& p, const Vec& k, const Vec& z_witness, double tol) {
  return zk_contains(p, k, z_witness, tol);
}

Ternary k_contains(const DualPair& p, const Vec& k, double tol) {
  if (zk_contains(p, k, Vec::Zero(p.dim()), tol)) return Ternary::yes;
  return Ternary::undecidable;
}

Vec douglas_rachford_apply(const DualPair& p, const Vec& x) {
  const Vec ja = p.a().resolvent(x);
  return p.b().resolvent(2.0 * ja - x) + x - ja;
}

Vec psi(const DualPair& p, const Vec& z, const Vec& k, double tol) {
  if (!kz_contains(p, z, k, tol)) {
    throw std::invalid_argument("psi: (z, k) is not a solution pair (k not in K_z)");
  }
  return z + k;
}

std::pair<Vec, Vec> psi_inverse(const DualPair& p, const Vec& x, double tol) {
  if ((douglas_rachford_apply(p, x) - x).norm() > tol) {
    throw std::invalid_argument("psi_inverse: x is not a fixed point of T");
  }
  return minty_param(p.a(), x);
}

double passty_orthogonality(const DualPair& p, const Vec& z1, const Vec& k1,
                            const Vec& z2, const Vec& k2, double tol) {
  if (!kz_contains(p, z1, k1, tol) || !kz_contains(p, z2, k2, tol)) {
    throw std::invalid_argument("passty_orthogonality: membership failed");
  }
  return (k1 - k2).dot(z1 - z2);
}

bool parallel_sum_contains(const ResolventOperator& a, const ResolventOperator& b,
                           const Vec& x, const Vec& w, const std::vector<Vec>& grid,
                           double tol) {
  if (grid.empty()) throw std::invalid_argument("parallel_sum_contains: empty grid");
  for (const Vec& y : grid) {
    if (graph_contains(a, y, w, tol) && graph_contains(b, x - y, w, tol)) return true;
  }
  return false;
}

namespace {

// Minimize an extended-real objective over a dense grid on [lo, hi].
template <typename F>
std::pair<double, Vec> grid_minimize(const F& objective, const Vec& lo, const Vec& hi,
                                     double spacing) {
  const Eigen::Index d = lo.size();
  if (d < 1 || d > 2) {
    throw std::invalid_argument("grid oracle supports dimensions 1 and 2 only");
  }
  double best = std::numeric_limits<double>::infinity();
  Vec best_point = lo;
  const auto steps = [&](Eigen::Index i) {
    return static_cast<long>(std::floor((hi[i] - lo[i]) / spacing)) + 1;
  };
  Vec x(d);
  if (d == 1) {
    const long n = steps(0);
    for (long i = 0; i < n; ++i) {
      x[0] = lo[0] + static_cast<double>(i) * spacing;
      const double v = objective(x);
      if (v < best) {
        best = v;
        best_point = x;
      }
    }
  } else {
    const long n0 = steps(0), n1 = steps(1);
    for (long i = 0; i < n0; ++i) {
      x[0] = lo[0] + static_cast<double>(i) * spacing;
      for (long j = 0; j < n1; ++j) {
        x[1] = lo[1] + static_cast<double>(j) * spacing;
        const double v = objective(x);
        if (v < best) {
          best = v;
          best_point = x;
        }
      }
    }
  }
  return {best, best_point};
}

}  // namespace

TotalDualityReport total_duality_check(const ProxFunction& f, const ProxFunction& g,
                                       const Vec& box_lo, const Vec& box_hi,
                                       double spacing) {
  if (f.dim() != g.dim()) throw std::invalid_argument("total_duality_check: dim mismatch");
  if (box_lo.size() != f.dim() || box_hi.size() != f.dim()) {
    throw std::invalid_argument("total_duality_check: bounding box dim mismatch");
  }
  if (!f.has_conjugate() || !g.has_conjugate()) {
    throw std::invalid_argument(
        "total_duality_check: both functions need registered conjugates");
  }
  if (!(spacing > 0.0)) throw std::invalid_argument("total_duality_check: bad spacing");

  const auto primal = grid_minimize(
      [&](const Vec& x) { return f.value(x) + g.value(x); }, box_lo, box_hi, spacing);
  const auto dual = grid_minimize(
      [&](const Vec& k) { return f.conjugate().value(k) + g.conjugate().value(-k); },
      box_lo, box_hi, spacing);

  TotalDualityReport report;
  report.primal_value = primal.first;
  report.dual_value = dual.first;
  report.primal_point = primal.second;
  report.dual_point = dual.second;
  report.gap = std::abs(primal.first + dual.first);
  return report;
}

std::vector<Vec> recover_z_from_dual(const DualPair& p, const Vec& k0,
                                     const std::vector<Vec>& probes, double tol) {
  if (!p.paramonotone()) {
    throw std::invalid_argument(
        "recover_z_from_dual: requires a paramonotone pair (Z_k = Z can fail "
        "otherwise)");
  }
  std::vector<Vec> members;
  for (const Vec& z : probes) {
    if (zk_contains(p, k0, z, tol)) members.push_back(z);
  }
  return members;
}

}  // namespace atd
