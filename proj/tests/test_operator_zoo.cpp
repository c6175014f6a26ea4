#include <doctest.h>

#include <cmath>
#include <limits>

#include "atd/prox.hpp"
#include "atd/random.hpp"
#include "atd/sets.hpp"
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

// Brute-force prox oracle: argmin over a dense grid of
// 1/2 (z - x)^2 + alpha f(z).  Independent of the case analysis in Pwl1D.
double prox_oracle(const Pwl1D& f, double x, double alpha) {
  double best = kInf, argbest = x;
  for (double z = x - 12.0; z <= x + 12.0; z += 1e-4) {
    const double fz = f.value(z);
    if (fz == kInf) continue;
    const double obj = 0.5 * (z - x) * (z - x) + alpha * fz;
    if (obj < best) {
      best = obj;
      argbest = z;
    }
  }
  return argbest;
}

}  // namespace

TEST_CASE("box projections") {
  const auto quad = normal_cone_operator(nonneg_orthant(2));
  CHECK(quad.resolvent(v2(1, -1)) == v2(1, 0));
  const auto seg = normal_cone_operator(box_set(v1(0), v1(2)));
  CHECK(seg.resolvent(v1(5))[0] == 2.0);
  const auto line = normal_cone_operator(box_set(v2(-kInf, 0), v2(kInf, 0)));
  CHECK(line.resolvent(v2(3, 4)) == v2(3, 0));
}

TEST_CASE("convex set invariants by sampling") {
  Rng rng(17);
  const auto sets = {box_set(v2(-1, 0), v2(2, kInf)), ball_set(v2(1, -1), 1.5),
                     halfline_set(v2(1, -1)), halfspace_set(v2(1, 2), 3.0)};
  for (const auto& s : sets) {
    for (int i = 0; i < 200; ++i) {
      const Vec x = rng.point_in_cube(2, 10.0);
      const Vec p = s.project(x);
      CHECK((s.project(p) - p).norm() <= 1e-12);  // idempotent
      // Variational characterization against other projected points.
      const Vec q = s.project(rng.point_in_cube(2, 10.0));
      CHECK((x - p).dot(q - p) <= 1e-10);
    }
  }
}

TEST_CASE("linear operator zoo") {
  Mat rot(2, 2);
  rot << 0, 1, -1, 0;
  const auto a = linear_operator(rot);
  CHECK((a.resolvent(v2(1, 0)) - v2(0.5, 0.5)).norm() <= 1e-14);
  CHECK(!a.paramonotone());

  CHECK(linear_operator(Mat::Zero(2, 2)).resolvent(v2(7, -8)) == v2(7, -8));
  CHECK((linear_operator(Mat::Identity(2, 2)).resolvent(v2(2, 4)) - v2(1, 2)).norm() <=
        1e-14);

  Mat neg = -Mat::Identity(2, 2);
  CHECK_THROWS_AS(linear_operator(neg), std::invalid_argument);
}

TEST_CASE("constant operator") {
  CHECK(constant_operator(v2(0, 0)).resolvent(v2(4, 5)) == v2(4, 5));
  CHECK(constant_operator(v2(1, 0)).resolvent(v2(1, 0)) == v2(0, 0));
  const auto a = constant_operator(v2(3, -2));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    CHECK(graph_contains(a, rng.point_in_cube(2, 10.0), v2(3, -2)));
  }
  CHECK(a.paramonotone());
}

TEST_CASE("prox operators") {
  const auto half_sq = prox_operator(quadratic_energy(2));
  CHECK(half_sq.resolvent(v2(4, -6)) == v2(2, -3));

  const auto hinge = separable_pwl({hinge_pwl(1.0)});
  CHECK(hinge.prox(v1(3))[0] == 2.0);
  CHECK(prox_operator(hinge).paramonotone());

  const auto ind = indicator_function(box_set(v1(0), v1(2)));
  CHECK(ind.prox(v1(5))[0] == 2.0);
}

TEST_CASE("pwl prox agrees with the brute-force oracle") {
  Rng rng(21);
  const Pwl1D cases[] = {
      hinge_pwl(1.0),
      Pwl1D(-kInf, kInf, {-1.0}, {-1.0, 0.0}, -1.0, 0.0),       // max(0, -x-1)
      Pwl1D(0.0, 2.0, {}, {0.0}, 0.0, 0.0),                     // indicator [0,2]
      Pwl1D(-kInf, kInf, {-1.0, 2.0}, {-2.0, 0.5, 3.0}, 0, 0),  // three pieces
      Pwl1D(-1.0, 4.0, {1.0}, {0.0, 1.0}, 0.0, 0.0),            // hinge on a segment
  };
  for (const auto& f : cases) {
    for (double alpha : {1.0, 0.5, 2.5}) {
      for (int i = 0; i < 25; ++i) {
        const double x = rng.uniform(-8.0, 8.0);
        CHECK(std::abs(f.prox(x, alpha) - prox_oracle(f, x, alpha)) <= 2e-4);
      }
    }
  }
}

TEST_CASE("pwl values and conjugates") {
  const Pwl1D hinge = hinge_pwl(1.0);
  CHECK(hinge.value(3.0) == 2.0);
  CHECK(hinge.value(-2.0) == 0.0);

  const Pwl1D conj = hinge.conjugate();  // y on [0,1]
  CHECK(conj.value(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(conj.value(0.0) == 0.0);
  CHECK(conj.value(1.0) == 1.0);
  CHECK(conj.value(1.5) == kInf);
  CHECK(conj.value(-0.1) == kInf);

  // Double conjugation reproduces the function on a grid.
  const Pwl1D back = conj.conjugate();
  for (double x = -4.0; x <= 4.0; x += 0.37) {
    CHECK(back.value(x) == doctest::Approx(hinge.value(x)).epsilon(1e-12));
  }

  // Support function of an interval.
  const Pwl1D sup = interval_indicator_pwl(1.0, 3.0).conjugate();
  CHECK(sup.value(2.0) == doctest::Approx(6.0));   // 3*2
  CHECK(sup.value(-2.0) == doctest::Approx(-2.0)); // 1*(-2)
}

TEST_CASE("moreau decomposition for registered conjugates") {
  Rng rng(31);
  const auto funcs = {separable_pwl({hinge_pwl(1.0)}),
                      indicator_function(box_set(v1(1), v1(3))),
                      quadratic_energy(1), linear_function(v1(2.5))};
  for (const auto& f : funcs) {
    REQUIRE(f.has_conjugate());
    for (int i = 0; i < 100; ++i) {
      const Vec x = rng.point_in_cube(1, 8.0);
      CHECK((f.prox(x) + f.conjugate().prox(x) - x).norm() <= 1e-12);
    }
  }
}

TEST_CASE("ww operator: exact resolvent cases") {
  const auto a = skew_plus_normal_cone_ww();
  CHECK(a.resolvent(v2(0, 2)) == v2(1, 1));
  CHECK(a.resolvent(v2(1, 1)) == v2(1, 0));
  CHECK(!a.paramonotone());
}

TEST_CASE("ww resolvent satisfies its defining inclusion") {
  // Independent of the case analysis: z = J(x) must satisfy
  // x - z - Rz in N_U(z) for U the upper halfplane and R the quarter turn,
  // i.e. the leftover is zero in the interior and a downward vertical
  // vector on the boundary.
  const auto a = skew_plus_normal_cone_ww();
  Rng rng(88);
  for (int i = 0; i < 500; ++i) {
    const Vec x = rng.point_in_cube(2, 10.0);
    const Vec z = a.resolvent(x);
    CHECK(z[1] >= 0.0);
    const Vec leftover = x - z - v2(-z[1], z[0]);
    if (z[1] > 0.0) {
      CHECK(leftover.norm() <= 1e-12);
    } else {
      CHECK(std::abs(leftover[0]) <= 1e-12);
      CHECK(leftover[1] <= 1e-12);
    }
  }
}

TEST_CASE("composed resolvent satisfies its defining inclusion") {
  // z = J_{L*CL}(x) iff x - z = L^T w for some w in C(Lz); recover w from
  // the row structure of L and test it through C's own graph oracle.
  const auto c = normal_cone_operator(box_set(v1(0), v1(kInf)));
  Mat row(1, 2);
  row << 2, 0;
  const auto lifted = composed_lcl(c, row);
  Rng rng(89);
  for (int i = 0; i < 500; ++i) {
    const Vec x = rng.point_in_cube(2, 10.0);
    const Vec z = lifted.resolvent(x);
    const Vec leftover = x - z;
    CHECK(std::abs(leftover[1]) <= 1e-12);       // range of L^T is the x1 axis
    const Vec w = v1(leftover[0] / 2.0);         // L^T w = (2w, 0)
    CHECK(graph_contains(c, row * z, w, 1e-9));  // w in C(Lz)
  }
}

TEST_CASE("ww operator: boundary values are nested rays") {
  const auto a = skew_plus_normal_cone_ww();
  // A(xi, 0) = {0} x (-inf, xi]: membership of (0, s) iff s <= xi.
  CHECK(graph_contains(a, v2(1, 0), v2(0, 1)));
  CHECK(graph_contains(a, v2(1, 0), v2(0, 0.25)));
  CHECK(graph_contains(a, v2(1, 0), v2(0, -6)));
  CHECK(!graph_contains(a, v2(1, 0), v2(0, 1.2)));

  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const double xi = rng.uniform(-4.0, 4.0);
    const double eta = xi + rng.uniform(0.1, 3.0);
    const double s = xi - rng.uniform(0.0, 5.0);
    // every value at (xi,0) is a value at (eta,0)...
    CHECK(graph_contains(a, v2(eta, 0), v2(0, s)));
    // ...and the midpoint level separates the two rays strictly.
    const double mid = 0.5 * (xi + eta);
    CHECK(graph_contains(a, v2(eta, 0), v2(0, mid)));
    CHECK(!graph_contains(a, v2(xi, 0), v2(0, mid)));
  }
}

TEST_CASE("composed operator L*CL") {
  const auto c = normal_cone_operator(box_set(v1(0), v1(kInf)));

  // L = Id: the lift is the operator itself.
  Mat id1 = Mat::Identity(1, 1);
  const auto same = composed_lcl(c, id1);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const Vec x = rng.point_in_cube(1, 10.0);
    CHECK((same.resolvent(x) - c.resolvent(x)).norm() <= 1e-14);
  }

  Mat row(1, 2);
  row << 1, 0;
  const auto lifted = composed_lcl(c, row);
  CHECK(lifted.resolvent(v2(-1, 5)) == v2(0, 5));
  CHECK(lifted.paramonotone());

  // alpha = 4 exercises the scaled-resolvent path; the lift is still the
  // normal cone of the halfplane x1 >= 0.
  Mat row2(1, 2);
  row2 << 2, 0;
  const auto lifted4 = composed_lcl(c, row2);
  const auto halfplane = normal_cone_operator(box_set(v2(0, -kInf), v2(kInf, kInf)));
  for (int i = 0; i < 200; ++i) {
    const Vec x = rng.point_in_cube(2, 10.0);
    CHECK((lifted4.resolvent(x) - halfplane.resolvent(x)).norm() <= 1e-12);
  }

  // Paramonotonicity transfers from C, both ways.
  CHECK(!composed_lcl(rotator_operator(-M_PI_2), Mat::Identity(2, 2)).paramonotone());

  // L L^T must be a positive multiple of the identity.
  Mat bad(2, 2);
  bad << 1, 1, 0, 0;
  CHECK_THROWS_AS(composed_lcl(rotator_operator(M_PI_2), bad), std::invalid_argument);
}

TEST_CASE("scaled resolvents are exact") {
  // Linear: (Id + alpha M) z = x.
  Mat rot(2, 2);
  rot << 0, 1, -1, 0;
  const auto lin = linear_operator(rot);
  for (double alpha : {0.5, 2.0, 7.0}) {
    const Vec x = v2(1, 2);
    const Vec z = lin.scaled_resolvent(alpha, x);
    CHECK(((Mat::Identity(2, 2) + alpha * rot) * z - x).norm() <= 1e-13);
  }
  // Prox: J_{alpha df} = prox_{alpha f}.
  const auto hinge = separable_pwl({hinge_pwl(0.0)});
  const auto op = prox_operator(hinge);
  CHECK(op.scaled_resolvent(2.0, v1(5))[0] == 3.0);  // 5 - 2*1
}

TEST_CASE("pwl construction enforces convexity") {
  CHECK_THROWS_AS(Pwl1D(-kInf, kInf, {0.0}, {1.0, 0.5}, 0.0, 0.0),
                  std::invalid_argument);  // decreasing slopes
  CHECK_THROWS_AS(Pwl1D(-kInf, kInf, {1.0, 0.5}, {0.0, 1.0, 2.0}, 0.0, 0.0),
                  std::invalid_argument);  // unsorted breakpoints
  CHECK_THROWS_AS(Pwl1D(0.0, 1.0, {2.0}, {0.0, 1.0}, 0.0, 0.0),
                  std::invalid_argument);  // breakpoint outside the domain
  CHECK_THROWS_AS(Pwl1D(1.0, 0.0, {}, {0.0}, 0.0, 0.0),
                  std::invalid_argument);  // empty domain
}

TEST_CASE("set intersections need box structure") {
  const auto a = box_set(v1(0), v1(2));
  const auto b = box_set(v1(1), v1(3));
  const auto both = intersect_boxes(a, b);
  CHECK(both.project(v1(5))[0] == 2.0);
  CHECK(both.project(v1(0))[0] == 1.0);
  CHECK_THROWS_AS(intersect_boxes(a, ball_set(v1(0), 1.0)), std::invalid_argument);
}
