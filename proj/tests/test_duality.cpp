#include <doctest.h>

#include <cmath>
#include <limits>

#include "atd/duality.hpp"
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

DualPair skewskew() {
  return DualPair(rotator_operator(-M_PI_2), rotator_operator(M_PI_2));
}

DualPair normskew() {
  return DualPair(normal_cone_operator(nonneg_orthant(2)), rotator_operator(M_PI_2));
}

DualPair feasibility() {
  return DualPair(normal_cone_operator(box_set(v1(0), v1(2))),
                  normal_cone_operator(box_set(v1(1), v1(3))));
}

DualPair hinge_pair() {
  return DualPair(prox_operator(separable_pwl({hinge_pwl(1.0)})),
                  prox_operator(separable_pwl(
                      {Pwl1D(-kInf, kInf, {-1.0}, {-1.0, 0.0}, -1.0, 0.0)})));
}

}  // namespace

TEST_CASE("dual pair construction") {
  const auto p = skewskew();
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Vec x = rng.point_in_cube(2, 8.0);
    // The dual pair of the rotator pair is the swapped pair.
    CHECK((p.dual_a().resolvent(x) - p.b().resolvent(x)).norm() <= 1e-13);
    CHECK((p.dual_b().resolvent(x) - p.a().resolvent(x)).norm() <= 1e-13);
    // Biduality.
    const auto dd = p.dual().dual();
    CHECK((dd.a().resolvent(x) - p.a().resolvent(x)).norm() <= 1e-12);
    CHECK((dd.b().resolvent(x) - p.b().resolvent(x)).norm() <= 1e-12);
  }

  const auto f = feasibility();
  const auto u = box_set(v1(0), v1(2));
  for (int i = 0; i < 50; ++i) {
    const Vec x = rng.point_in_cube(1, 8.0);
    CHECK(std::abs(f.dual_a().resolvent(x)[0] - (x[0] - u.project(x)[0])) <= 1e-14);
  }

  CHECK_THROWS_AS(DualPair(normal_cone_operator(box_set(v1(0), v1(1))),
                           rotator_operator(M_PI_2)),
                  std::invalid_argument);
}

TEST_CASE("kz and zk membership") {
  const auto p = normskew();
  CHECK(kz_contains(p, v2(2, 0), v2(0, -2)));
  CHECK(!kz_contains(p, v2(2, 0), v2(0, 2)));
  CHECK(zk_contains(p, v2(0, -2), v2(2, 0)));
  CHECK(!zk_contains(p, v2(0, -2), v2(0, 0)));

  // Common zero: k = 0 belongs to K_z exactly at common zeros.
  const auto f = feasibility();
  CHECK(kz_contains(f, v1(1.5), v1(0)));
  CHECK(!kz_contains(f, v1(0.5), v1(0)));

  // For the rotator pair k = Az works for every z.
  const auto s = skewskew();
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const Vec z = rng.point_in_cube(2, 8.0);
    const Vec k = v2(z[1], -z[0]);
    CHECK(kz_contains(s, z, k));
    CHECK(zk_contains(s, k, z));
  }
}

TEST_CASE("membership with and without witnesses") {
  const auto f = feasibility();
  CHECK(z_contains(f, v1(1.5), v1(0)));
  CHECK(!z_contains(f, v1(0.5), v1(0)));
  CHECK(!z_contains(f, v1(0.5), v1(0.2)));
  CHECK(z_contains(f, v1(1.5)) == Ternary::yes);
  CHECK(z_contains(f, v1(0.5)) == Ternary::undecidable);

  CHECK(k_contains(f, v1(0), v1(1.5)));
  CHECK(!k_contains(f, v1(0.3), v1(1.5)));

  // Without a witness the zero certificate cannot decide the ray fixture.
  const auto n = normskew();
  CHECK(z_contains(n, v2(2, 0)) == Ternary::undecidable);
  CHECK(z_contains(n, v2(2, 0), v2(0, -2)));
}

TEST_CASE("psi and its inverse") {
  const auto n = normskew();
  const Vec x = psi(n, v2(1, 0), v2(0, -1));
  CHECK(x == v2(1, -1));
  CHECK((douglas_rachford_apply(n, x) - x).norm() <= 1e-14);
  const auto [z, k] = psi_inverse(n, x);
  CHECK(z == v2(1, 0));
  CHECK(k == v2(0, -1));

  // Common zero maps to itself.
  const auto f = feasibility();
  CHECK(psi(f, v1(1.5), v1(0))[0] == 1.5);
  const auto [zf, kf] = psi_inverse(f, v1(2));
  CHECK(zf[0] == 2.0);
  CHECK(kf[0] == 0.0);

  const auto s = skewskew();
  const Vec xs = psi(s, v2(1, 0), v2(0, -1));
  CHECK(xs == v2(1, -1));
  CHECK((douglas_rachford_apply(s, xs) - xs).norm() <= 1e-14);

  CHECK_THROWS_AS(psi(n, v2(1, 0), v2(0, -2)), std::invalid_argument);
  CHECK_THROWS_AS(psi_inverse(f, v1(5)), std::invalid_argument);  // T(5) = 4 != 5
}

TEST_CASE("passty orthogonality") {
  const auto s = skewskew();
  CHECK(passty_orthogonality(s, v2(1, 0), v2(0, -1), v2(0, 1), v2(1, 0)) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(passty_orthogonality(s, v2(1, 0), v2(0, -1), v2(1, 0), v2(0, -1)) == 0.0);

  const auto ww = DualPair(skew_plus_normal_cone_ww(),
                           normal_cone_operator(box_set(v2(-kInf, 0), v2(kInf, 0))));
  CHECK(passty_orthogonality(ww, v2(1, 0), v2(0, 0.5), v2(2, 0), v2(0, 1)) == 0.0);

  CHECK_THROWS_AS(passty_orthogonality(s, v2(1, 0), v2(5, 5), v2(0, 1), v2(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("parallel sum membership on a grid") {
  const auto cone = normal_cone_operator(box_set(v1(0), v1(kInf)));
  std::vector<Vec> grid;
  for (double y = 0.0; y <= 2.0; y += 0.5) grid.push_back(v1(y));
  CHECK(parallel_sum_contains(cone, cone, v1(2), v1(0), grid));

  const auto id = linear_operator(Mat::Identity(1, 1));
  std::vector<Vec> grid2;
  for (double y = -2.0; y <= 2.5; y += 0.25) grid2.push_back(v1(y));
  // For A = B = Id the parallel sum is x/2, so w = 0.5 has no witness at
  // x = 2 while w = 1 does.
  CHECK(!parallel_sum_contains(id, id, v1(2), v1(0.5), grid2));
  CHECK(parallel_sum_contains(id, id, v1(2), v1(1), grid2));

  CHECK_THROWS_AS(parallel_sum_contains(id, id, v1(2), v1(1), {}),
                  std::invalid_argument);
}

TEST_CASE("total duality via the grid oracle") {
  const auto f = indicator_function(box_set(v1(0), v1(2)));
  const auto g = indicator_function(box_set(v1(1), v1(3)));
  const auto r = total_duality_check(f, g, v1(-3), v1(3));
  CHECK(r.primal_value == 0.0);
  CHECK(std::abs(r.dual_value) <= 1e-12);
  CHECK(r.gap <= 1e-12);
  CHECK(r.primal_point[0] >= 1.0);
  CHECK(r.primal_point[0] <= 2.0);
  CHECK(std::abs(r.dual_point[0]) <= 1e-12);

  const auto q = quadratic_energy(1);
  const auto rq = total_duality_check(q, q, v1(-2), v1(2));
  CHECK(std::abs(rq.primal_value) <= 1e-12);
  CHECK(std::abs(rq.dual_value) <= 1e-12);

  const auto h1 = separable_pwl({hinge_pwl(1.0)});
  const auto h2 = separable_pwl({Pwl1D(-kInf, kInf, {-1.0}, {-1.0, 0.0}, -1.0, 0.0)});
  const auto rh = total_duality_check(h1, h2, v1(-3), v1(3));
  CHECK(std::abs(rh.primal_value) <= 1e-12);
  CHECK(std::abs(rh.dual_value) <= 1e-12);
  CHECK(rh.primal_point[0] >= -1.0 - 1e-12);
  CHECK(rh.primal_point[0] <= 1.0 + 1e-12);

  // 2-D grids work at coarser spacing.
  const auto q2 = quadratic_energy(2);
  const auto r2 = total_duality_check(q2, q2, v2(-1, -1), v2(1, 1), 1e-2);
  CHECK(std::abs(r2.primal_value) <= 1e-12);

  ProxFunction no_conj(1, [](double, const Vec& x) { return x; },
                       [](const Vec&) { return 0.0; }, "bare");
  CHECK_THROWS_AS(total_duality_check(no_conj, q, v1(-1), v1(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(total_duality_check(quadratic_energy(3), quadratic_energy(3),
                                      Vec::Zero(3), Vec::Ones(3)),
                  std::invalid_argument);
}

TEST_CASE("primal recovery from one dual solution") {
  const auto f = feasibility();
  const auto got = recover_z_from_dual(
      f, v1(0), {v1(0), v1(0.5), v1(1), v1(1.5), v1(2), v1(2.5), v1(3)});
  REQUIRE(got.size() == 3);
  CHECK(got[0][0] == 1.0);
  CHECK(got[1][0] == 1.5);
  CHECK(got[2][0] == 2.0);

  const auto h = hinge_pair();
  const auto gh = recover_z_from_dual(h, v1(0), {v1(-2), v1(-1), v1(0), v1(1), v1(2)});
  REQUIRE(gh.size() == 3);
  CHECK(gh[0][0] == -1.0);
  CHECK(gh[2][0] == 1.0);

  // Axis sets: K contains (0,1); probes on the axis classify by sign.
  const auto axes = DualPair(normal_cone_operator(box_set(v2(-kInf, 0), v2(kInf, 0))),
                             normal_cone_operator(box_set(v2(0, 0), v2(kInf, 0))));
  const auto ga = recover_z_from_dual(
      axes, v2(0, 1), {v2(-1, 0), v2(0, 0), v2(2, 0), v2(1, 1)});
  REQUIRE(ga.size() == 2);
  CHECK(ga[0] == v2(0, 0));
  CHECK(ga[1] == v2(2, 0));

  CHECK_THROWS_AS(recover_z_from_dual(normskew(), v2(0, -1), {v2(1, 0)}),
                  std::invalid_argument);
}

TEST_CASE("solution-pair graph is convex along segments") {
  // Property check on the rotator pair: combinations of solution pairs
  // stay solution pairs.
  const auto s = skewskew();
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const Vec z1 = rng.point_in_cube(2, 5.0), z2 = rng.point_in_cube(2, 5.0);
    const Vec k1 = v2(z1[1], -z1[0]), k2 = v2(z2[1], -z2[0]);
    for (double t : {0.25, 0.5, 0.75}) {
      const Vec zt = (1 - t) * z1 + t * z2;
      const Vec kt = (1 - t) * k1 + t * k2;
      CHECK(kz_contains(s, zt, kt, 1e-8));
    }
  }
}
