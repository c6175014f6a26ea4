#include <doctest.h>

#include <cmath>
#include <limits>

#include "atd/bestapprox.hpp"
#include "atd/random.hpp"
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

const ConvexSet kZ = box_set(v2(0, 0), v2(kInf, 0), "R+ x {0}");
const ConvexSet kK = box_set(v2(0, -kInf), v2(0, kInf), "{0} x R");
const ConvexSet kSum = box_set(v2(0, -kInf), v2(kInf, kInf), "R+ x R");

}  // namespace

TEST_CASE("orthogonality defect distinguishes the variants") {
  CHECK(orthogonality_defect(kZ, kK, OrthoKind::set_vs_set) <= 1e-12);
  CHECK(orthogonality_defect(kZ, kK, OrthoKind::diff_vs_diff) <= 1e-12);
  CHECK(orthogonality_defect(kZ, kK, OrthoKind::diff_vs_set) <= 1e-12);

  const ConvexSet singleton = singleton_set(v2(1, -0.5));
  const ConvexSet plane = box_set(v2(-kInf, -kInf), v2(kInf, kInf));
  // (Z-Z) ⊥ K fails for a non-origin singleton K against the whole plane...
  CHECK(orthogonality_defect(plane, singleton, OrthoKind::diff_vs_set) > 0.1);
  // ...while Z ⊥ (K-K) holds vacuously.
  CHECK(orthogonality_defect(singleton, plane, OrthoKind::diff_vs_set) <= 1e-12);
}

TEST_CASE("projection onto an orthogonal sum") {
  CHECK(project_orthogonal_sum(kZ, kK, v2(-1, 2)) == v2(0, 2));
  CHECK(project_orthogonal_sum(kZ, kK, v2(3, -4)) == v2(3, -4));  // already in U+V
  const ConvexSet origin = singleton_set(v2(0, 0));
  CHECK(project_orthogonal_sum(origin, kK, v2(5, 7)) == v2(0, 7));

  const ConvexSet line = box_set(v2(-kInf, 0), v2(kInf, 0));
  CHECK_THROWS_AS(project_orthogonal_sum(line, line, v2(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("translate formula") {
  const ConvexSet ray = box_set(v1(0), v1(kInf));
  CHECK(project_translate(ray, v1(3), v1(0))[0] == 3.0);
  CHECK(project_translate(ray, v1(0), v1(-2))[0] == 0.0);
  const ConvexSet point = singleton_set(v1(0));
  CHECK(project_translate(point, v1(7), v1(100))[0] == 7.0);
}

TEST_CASE("projection onto Z + K from one solution pair") {
  CHECK(project_z_plus_k(kZ, kK, v2(1, 0), v2(0, 1), v2(-1, 2)) == v2(0, 2));
  CHECK(project_z_plus_k(kZ, kK, v2(1, 0), v2(0, 1), v2(3, -4)) == v2(3, -4));

  const ConvexSet z1 = box_set(v1(1), v1(2));
  const ConvexSet k1 = singleton_set(v1(0));
  CHECK(project_z_plus_k(z1, k1, v1(1.5), v1(0), v1(5))[0] == 2.0);

  CHECK_THROWS_AS(project_z_plus_k(kZ, kK, v2(-1, 0), v2(0, 1), v2(0, 0)),
                  std::invalid_argument);  // z0 outside Z
}

TEST_CASE("simplified variants agree where their hypotheses hold") {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const Vec x = rng.point_in_cube(2, 9.0);
    const Vec base = project_z_plus_k(kZ, kK, v2(1, 0), v2(0, 1), x);
    CHECK((project_z_plus_k_zero_in_k(kZ, kK, v2(1, 0), x) - base).norm() <= 1e-11);
    CHECK((project_z_plus_k_zero_in_z(kZ, kK, v2(0, 1), x) - base).norm() <= 1e-11);
    CHECK((kSum.project(x) - base).norm() <= 1e-11);
  }
  // x = z0 with 0 in K stays put.
  CHECK(project_z_plus_k_zero_in_k(kZ, kK, v2(1, 0), v2(1, 0)) == v2(1, 0));

  // Guard failure: K a non-origin singleton against the whole plane.
  const ConvexSet plane = box_set(v2(-kInf, -kInf), v2(kInf, kInf));
  const ConvexSet off_origin = singleton_set(v2(1, -0.5));
  CHECK_THROWS_AS(
      project_z_plus_k_zero_in_k(plane, off_origin, v2(0, 0), v2(2, 2)),
      std::invalid_argument);
}

TEST_CASE("shadow projection collapses to P_Z") {
  const DualPair axes(normal_cone_operator(box_set(v2(-kInf, 0), v2(kInf, 0))),
                      normal_cone_operator(kZ));
  CHECK(shadow_projection(axes, kZ, kK, v2(0, 0), v2(-1, 2)) == v2(0, 0));
  CHECK(shadow_projection(axes, kZ, kK, v2(0, 3), v2(4, 0)) == v2(4, 0));  // x in Z

  const DualPair feas(normal_cone_operator(box_set(v1(0), v1(2))),
                      normal_cone_operator(box_set(v1(1), v1(3))));
  const ConvexSet z1 = box_set(v1(1), v1(2));
  const ConvexSet k1 = singleton_set(v1(0));
  CHECK(shadow_projection(feas, z1, k1, v1(0), v1(5))[0] == 2.0);

  CHECK_THROWS_AS(shadow_projection(axes, kZ, kK, v2(1, 1), v2(0, 0)),
                  std::invalid_argument);  // k0 outside K
}

TEST_CASE("shadow projection is independent of the dual witness") {
  const DualPair axes(normal_cone_operator(box_set(v2(-kInf, 0), v2(kInf, 0))),
                      normal_cone_operator(kZ));
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const Vec x = rng.point_in_cube(2, 9.0);
    const Vec ref = shadow_projection(axes, kZ, kK, v2(0, 0), x);
    for (double s : {-3.0, 0.5, 8.0}) {
      CHECK((shadow_projection(axes, kZ, kK, v2(0, s), x) - ref).norm() <= 1e-12);
    }
  }
}

TEST_CASE("composition through the fixed-point set") {
  const ConvexSet u = box_set(v1(0), v1(2));
  const ConvexSet v = box_set(v1(1), v1(3));
  const ConvexSet fix_t = box_set(v1(1), v1(2));
  const auto [via_fix, direct] = summerland_check(u, v, fix_t, v1(5));
  CHECK(via_fix[0] == 2.0);
  CHECK(direct[0] == 2.0);
  const auto [a2, b2] = summerland_check(u, v, fix_t, v1(1.5));
  CHECK(a2[0] == 1.5);
  CHECK(b2[0] == 1.5);

  const ConvexSet u2 = box_set(v2(-kInf, 0), v2(kInf, 0));
  const auto [a3, b3] = summerland_check(u2, kZ, kSum, v2(-1, 2));
  CHECK(a3 == v2(0, 0));
  CHECK(b3 == v2(0, 0));

  CHECK_THROWS_AS(summerland_check(u, ball_set(v1(1), 1.0), fix_t, v1(0)),
                  std::invalid_argument);
}
