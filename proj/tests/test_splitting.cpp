#include <doctest.h>

#include <cmath>
#include <limits>

#include "atd/random.hpp"
#include "atd/splitting.hpp"
#include "atd/zoo.hpp"

using namespace atd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vec v1(double a) {
  Vec v(1);
  v << a;
  return v;
}

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

DualPair skewskew() {
  return DualPair(rotator_operator(-M_PI_2), rotator_operator(M_PI_2));
}

DualPair feasibility() {
  return DualPair(normal_cone_operator(box_set(v1(0), v1(2))),
                  normal_cone_operator(box_set(v1(1), v1(3))));
}

DualPair axes_2d() {
  return DualPair(normal_cone_operator(box_set(v2(-kInf, 0), v2(kInf, 0))),
                  normal_cone_operator(box_set(v2(0, 0), v2(kInf, 0))));
}

// Dykstra's alternating projections: the independent oracle for the
// projection onto an intersection of two halfspaces.
Vec dykstra_two_halfspaces(const Vec& normal1, double off1, const Vec& normal2,
                           double off2, const Vec& x0) {
  const auto proj = [](const Vec& n, double off, const Vec& p) -> Vec {
    const double excess = p.dot(n) - off;
    if (excess <= 0.0) return p;
    return p - (excess / n.squaredNorm()) * n;
  };
  Vec x = x0, p = Vec::Zero(x0.size()), q = Vec::Zero(x0.size());
  for (int i = 0; i < 5000; ++i) {
    const Vec y = proj(normal1, off1, x + p);
    p = x + p - y;
    const Vec xn = proj(normal2, off2, y + q);
    q = y + q - xn;
    if ((xn - x).norm() <= 1e-14) return xn;
    x = xn;
  }
  return x;
}

}  // namespace

TEST_CASE("dr operator values") {
  const auto s = dr_operator(skewskew());
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Vec x = rng.point_in_cube(2, 8.0);
    CHECK((s.apply(x) - x).norm() <= 1e-12);  // R_B R_A = Id here
  }

  const auto n = dr_operator(DualPair(normal_cone_operator(nonneg_orthant(2)),
                                      rotator_operator(M_PI_2)));
  CHECK((n.apply(v2(1, -1)) - v2(1, -1)).norm() <= 1e-14);

  const auto f = dr_operator(feasibility());
  CHECK(f.apply(v1(5))[0] == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("pr operator and self-duality") {
  const auto s = pr_operator(skewskew());
  CHECK((s.apply(v2(3, -2)) - v2(3, -2)).norm() <= 1e-12);

  const auto seg = normal_cone_operator(box_set(v1(0), v1(2)));
  const auto both = pr_operator(DualPair(seg, seg));
  CHECK(both.apply(v1(5))[0] == 1.0);

  Rng rng(8);
  for (const auto& pair : {skewskew(), feasibility(), axes_2d()}) {
    const auto pr = pr_operator(pair);
    const auto pr_dual = pr_operator(pair.dual());
    const auto t = dr_operator(pair);
    const auto t_dual = dr_operator(pair.dual());
    for (int i = 0; i < 300; ++i) {
      const Vec x = rng.point_in_cube(pair.dim(), 8.0);
      CHECK((pr.apply(x) - pr_dual.apply(x)).norm() <= 1e-11);
      CHECK((t.apply(x) - t_dual.apply(x)).norm() <= 1e-11);
      CHECK((t.apply_reflection_form(x) - t.apply(x)).norm() <= 1e-12);
    }
  }

  CHECK_THROWS_AS(averaged_operator(skewskew(), 1.5), std::invalid_argument);
}

TEST_CASE("backward-backward composition is not self-dual") {
  // A = 0, B = N_{[1,3]}: the primal composition projects, the dual one
  // does not follow along.
  const auto p = DualPair(linear_operator(Mat::Zero(1, 1)),
                          normal_cone_operator(box_set(v1(1), v1(3))));
  CHECK(backward_backward_dual_gap(p, v1(0)) <= 1e-14);

  // Oracle at x = 5: forward side P(5) = 3; dual side J_{B^{-v}}(J_{A^{-1}}5)
  // = J_{B^{-v}}(0) = 0 + P(0) = 1; gap 2.
  CHECK(backward_backward_dual_gap(p, v1(5)) == doctest::Approx(2.0).epsilon(1e-14));

  // For A = B = 0 the dual composition collapses to the zero map while the
  // primal one is the identity, so the gap at x is ||x||.
  const auto zeros = DualPair(linear_operator(Mat::Zero(1, 1)),
                              linear_operator(Mat::Zero(1, 1)));
  CHECK(backward_backward_dual_gap(zeros, v1(7)) == 7.0);

  // Regression: the rotator pair happens to be backward-backward self-dual.
  CHECK(backward_backward_dual_gap(skewskew(), v2(1, 0)) <= 1e-14);
}

TEST_CASE("fixed point residual") {
  const auto f = dr_operator(feasibility());
  CHECK(fixed_point_residual(f, v1(1.5)) <= 1e-12);
  CHECK(fixed_point_residual(f, v1(5)) == doctest::Approx(1.0).epsilon(1e-14));

  const auto n = dr_operator(DualPair(normal_cone_operator(nonneg_orthant(2)),
                                      rotator_operator(M_PI_2)));
  CHECK(fixed_point_residual(n, v2(1, -1)) <= 1e-13);
}

TEST_CASE("dr iteration on the feasibility fixture") {
  const auto op = dr_operator(feasibility());
  const auto trace = iterate_dr(op, v1(5), 1e-8, 100);
  CHECK(trace.converged);
  CHECK(trace.iterations_used <= 4);
  // Hand-computed orbit 5, 4, 3, 2, 2.
  REQUIRE(trace.iterates.size() >= 4);
  CHECK(trace.iterates[0][0] == 5.0);
  CHECK(trace.iterates[1][0] == 4.0);
  CHECK(trace.iterates[2][0] == 3.0);
  CHECK(trace.iterates[3][0] == 2.0);
  CHECK(trace.last()[0] == 2.0);
  CHECK(trace.last_shadow()[0] == 2.0);

  // Shadows recorded exactly as J_A of the iterates.
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    CHECK(trace.shadows[i] == op.pair().a().resolvent(trace.iterates[i]));
  }

  // Fejer monotonicity with respect to sampled fixed points.
  for (double p : {1.0, 1.5, 2.0}) {
    for (std::size_t i = 0; i + 1 < trace.iterates.size(); ++i) {
      CHECK((trace.iterates[i + 1] - v1(p)).norm() <=
            (trace.iterates[i] - v1(p)).norm() + 1e-10);
    }
  }
}

TEST_CASE("dr iteration: fixed starts converge in zero steps") {
  const auto op = dr_operator(feasibility());
  const auto trace = iterate_dr(op, v1(1.5), 1e-10, 100);
  CHECK(trace.converged);
  CHECK(trace.iterations_used == 0);
  CHECK(trace.iterates.size() == 1);

  const auto n = dr_operator(DualPair(normal_cone_operator(nonneg_orthant(2)),
                                      rotator_operator(M_PI_2)));
  const auto tn = iterate_dr(n, v2(3, -3), 1e-10, 100);
  CHECK(tn.converged);
  CHECK(tn.iterations_used == 0);
}

TEST_CASE("halpern iteration converges to the anchored fixed point") {
  // Fix T = [1,2]; anchor 5 projects to 2 and the shadow follows.  The
  // anchor-pull part of the stopping rule needs n of order 3/tol here.
  const auto op = dr_operator(feasibility());
  const auto trace = iterate_halpern(op, v1(5), v1(5), {}, 1e-4, 200000);
  CHECK(trace.converged);
  CHECK(std::abs(trace.last()[0] - 2.0) <= 1e-3);
  CHECK(std::abs(trace.last_shadow()[0] - 2.0) <= 1e-3);

  // Anchor already fixed: the iteration never moves.
  const auto still = iterate_halpern(op, v1(1.5), v1(1.5), {}, 1e-9, 1000);
  CHECK(still.converged);
  CHECK(still.last()[0] == 1.5);

  // 2-D fixture: anchor (-1,2) lands on (0,2), shadow on the origin.
  const auto ax = dr_operator(axes_2d());
  const auto t2 = iterate_halpern(ax, v2(-1, 2), v2(-1, 2), {}, 1e-4, 100000);
  CHECK(t2.converged);
  CHECK((t2.last() - v2(0, 2)).norm() <= 1e-3);
  CHECK((t2.last_shadow() - v2(0, 0)).norm() <= 1e-3);

  // A custom admissible schedule works too.
  const auto custom = iterate_halpern(
      op, v1(5), v1(5), [](int n) { return 1.0 / (n + 10.0); }, 1e-4, 200000);
  CHECK(custom.converged);
  CHECK(std::abs(custom.last()[0] - 2.0) <= 1e-3);

  CHECK_THROWS_AS(iterate_halpern(op, v1(0), v1(0), [](int) { return 1.5; }, 1e-6, 10),
                  std::invalid_argument);
}

TEST_CASE("haugazeau update formula") {
  // Along an actual run every step must match the Dykstra oracle for the
  // projection of y onto H(y,a) ∩ H(a,b).
  const auto op = dr_operator(feasibility());
  const Vec y = v1(5);
  Vec x = y;
  for (int n = 0; n < 6; ++n) {
    const Vec tx = op.apply(x);
    if ((tx - x).norm() <= 1e-14) break;
    const Vec q = haugazeau_q(y, x, tx);
    // H(u,v) = {h : <h - v, u - v> <= 0}; as halfspaces in the oracle's form.
    const Vec n1 = y - x;
    const Vec n2 = x - tx;
    if (n1.norm() > 1e-14) {
      const Vec oracle = dykstra_two_halfspaces(n1, x.dot(n1), n2, tx.dot(n2), y);
      CHECK((q - oracle).norm() <= 1e-6);
    }
    x = q;
  }
  CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("haugazeau iteration") {
  const auto op = dr_operator(feasibility());
  const auto trace = iterate_haugazeau(op, v1(5), 1e-9, 1000);
  CHECK(trace.converged);
  CHECK(trace.last()[0] == doctest::Approx(2.0).epsilon(1e-12));

  // Anchor already fixed: trace of length one.
  const auto fixed = iterate_haugazeau(op, v1(1.5), 1e-9, 1000);
  CHECK(fixed.converged);
  CHECK(fixed.iterations_used == 0);
  CHECK(fixed.iterates.size() == 1);

  const auto ax = dr_operator(axes_2d());
  const auto t2 = iterate_haugazeau(ax, v2(-1, 2), 1e-9, 10000);
  CHECK(t2.converged);
  CHECK((t2.last() - v2(0, 2)).norm() <= 1e-6);
}

TEST_CASE("iteration budget exhaustion reports instead of throwing") {
  const auto op = dr_operator(feasibility());
  const auto trace = iterate_dr(op, v1(100), 1e-12, 3);
  CHECK(!trace.converged);
  CHECK(trace.iterations_used == 3);
}
