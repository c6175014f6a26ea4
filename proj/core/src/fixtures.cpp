#include "atd/fixtures.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "atd/bestapprox.hpp"
#include "atd/zoo.hpp"

namespace atd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vec vec1(double a) {
  Vec v(1);
  v << a;
  return v;
}

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::identities: return "identities";
    case Suite::duality: return "duality";
    case Suite::paramonotone: return "paramonotone";
    case Suite::projections: return "projections";
    case Suite::fenchel: return "fenchel";
  }
  return "?";
}

Suite suite_from_string(const std::string& name) {
  if (name == "identities") return Suite::identities;
  if (name == "duality") return Suite::duality;
  if (name == "paramonotone") return Suite::paramonotone;
  if (name == "projections") return Suite::projections;
  if (name == "fenchel") return Suite::fenchel;
  throw UsageError("unknown suite: " + name);
}

namespace {

Fixture make_skewskew() {
  DualPair pair(rotator_operator(-M_PI_2), rotator_operator(M_PI_2));
  Fixture fx("skewskew",
             "rotators by -pi/2 and +pi/2: A + B = 0, so every "
             "point is primal and dual optimal (Z = K = R^2)",
             pair);
  fx.solutions.z_set = box_set(vec2(-kInf, -kInf), vec2(kInf, kInf), "R^2");
  fx.solutions.k_set = fx.solutions.z_set;
  fx.solutions.sample_pair = [](Rng& rng) {
    const Vec z = rng.point_in_cube(2, 5.0);
    return std::make_pair(z, vec2(z[1], -z[0]));  // k = Az
  };
  fx.solutions.sample_z = {vec2(1, 0), vec2(0, 1), vec2(-2, 3)};
  fx.solutions.sample_k = {vec2(0, -1), vec2(1, 0), vec2(3, 2)};
  fx.fix_t = fx.solutions.z_set;  // T = Id
  fx.common_zero = vec2(0, 0);

  fx.expectations.push_back(
      {"psi-spot", Suite::duality, [pair]() {
         const Vec x = psi(pair, vec2(1, 0), vec2(0, -1));
         const double r = std::max((x - vec2(1, -1)).norm(),
                                   (douglas_rachford_apply(pair, x) - x).norm());
         return residual_check("psi-spot",
                               "psi((1,0),(0,-1)) = (1,-1) is a fixed point of T",
                               r, 1e-12);
       }});
  fx.expectations.push_back(
      {"dual-pair-swap", Suite::duality, [pair]() {
         // For this pair the dual pair is the swapped pair (B, A).
         double r = 0.0;
         for (const Vec& x : {vec2(1, 0), vec2(0, 1), vec2(1, 1), vec2(-2, 3)}) {
           r = std::max(r, (pair.dual_a().resolvent(x) - pair.b().resolvent(x)).norm());
           r = std::max(r, (pair.dual_b().resolvent(x) - pair.a().resolvent(x)).norm());
         }
         return residual_check("dual-pair-swap",
                               "the dual pair coincides with the swapped pair",
                               r, 1e-14);
       }});
  return fx;
}

Fixture make_normskew() {
  DualPair pair(normal_cone_operator(nonneg_orthant(2)), rotator_operator(M_PI_2));
  Fixture fx("normskew",
             "normal cone of the nonnegative orthant paired with "
             "the rotator by +pi/2: Z is a ray, K_z is a moving "
             "singleton, and the Z x K rectangle fails",
             pair);
  fx.solutions.z_set = box_set(vec2(0, 0), vec2(kInf, 0), "R+ x {0}");
  fx.solutions.k_set = box_set(vec2(0, -kInf), vec2(0, 0), "{0} x R-");
  fx.solutions.sample_pair = [](Rng& rng) {
    const double t = rng.uniform(0.0, 5.0);
    return std::make_pair(vec2(t, 0), vec2(0, -t));
  };
  fx.solutions.sample_z = {vec2(0, 0), vec2(1, 0), vec2(2.5, 0)};
  fx.solutions.sample_k = {vec2(0, 0), vec2(0, -1), vec2(0, -2.5)};
  fx.fix_t = halfline_set(vec2(1, -1), "ray{(t,-t): t>=0}");
  fx.common_zero = vec2(0, 0);
  fx.expect_rectangle_failure = true;

  fx.expectations.push_back(
      {"fixed-ray-points", Suite::duality, [pair]() {
         double r = 0.0;
         for (double t : {0.0, 0.5, 1.0, 2.0, 10.0}) {
           const Vec x = vec2(t, -t);
           r = std::max(r, (douglas_rachford_apply(pair, x) - x).norm());
         }
         return residual_check("fixed-ray-points",
                               "T(t,-t) = (t,-t) along the fixed-point ray", r,
                               1e-12);
       }});
  fx.expectations.push_back(
      {"psi-inverse-on-ray", Suite::duality, [pair]() {
         double r = 0.0;
         for (double t : {0.0, 0.5, 1.0, 2.0, 10.0}) {
           const auto [z, k] = psi_inverse(pair, vec2(t, -t));
           r = std::max({r, (z - vec2(t, 0)).norm(), (k - vec2(0, -t)).norm()});
           if (!kz_contains(pair, z, k)) r = std::max(r, 1.0);
         }
         return residual_check("psi-inverse-on-ray",
                               "psi_inverse(t,-t) = ((t,0),(0,-t)) passes "
                               "membership",
                               r, 0.0);
       }});
  fx.expectations.push_back(
      {"kz-spot", Suite::duality, [pair]() {
         return verdict_check("kz-spot", "K_{(2,0)} = {(0,-2)}", true,
                              kz_contains(pair, vec2(2, 0), vec2(0, -2)));
       }});
  fx.expectations.push_back(
      {"rectangle-counterexample", Suite::paramonotone, [pair]() {
         // (1,0) and (0,-2) are both solution components, yet the cross
         // pair is not in gr K: recovery from one dual solution fails here.
         return verdict_check("rectangle-counterexample",
                              "cross pair ((1,0),(0,-2)) must fail membership",
                              false, kz_contains(pair, vec2(1, 0), vec2(0, -2)));
       }});
  fx.expectations.push_back(
      {"recovery-rejected", Suite::paramonotone, [pair]() {
         bool threw = false;
         try {
           recover_z_from_dual(pair, vec2(0, -1), {vec2(1, 0)});
         } catch (const std::invalid_argument&) {
           threw = true;
         }
         return verdict_check("recovery-rejected",
                              "primal recovery refuses a non-paramonotone pair",
                              true, threw);
       }});
  return fx;
}

Fixture make_feasibility_1d() {
  ConvexSet u = box_set(vec1(0), vec1(2), "[0,2]");
  ConvexSet v = box_set(vec1(1), vec1(3), "[1,3]");
  DualPair pair(normal_cone_operator(u), normal_cone_operator(v));
  Fixture fx("feasibility-1d",
             "convex feasibility for the intervals [0,2] and "
             "[1,3]: Z = [1,2], K = {0}",
             pair);
  fx.solutions.z_set = box_set(vec1(1), vec1(2), "[1,2]");
  fx.solutions.k_set = singleton_set(vec1(0), "{0}");
  fx.solutions.sample_pair = [](Rng& rng) {
    return std::make_pair(vec1(rng.uniform(1.0, 2.0)), vec1(0.0));
  };
  fx.solutions.sample_z = {vec1(1), vec1(1.5), vec1(2)};
  fx.solutions.sample_k = {vec1(0), vec1(0), vec1(0)};
  fx.fix_t = fx.solutions.z_set;
  fx.u_set = u;
  fx.v_set = v;
  fx.common_zero = vec1(1.5);

  FenchelData fd{.f = indicator_function(u),
                 .g = indicator_function(v),
                 .box_lo = vec1(-3),
                 .box_hi = vec1(3),
                 .spacing = 1e-3,
                 .expected_primal_value = 0.0,
                 .recover_k0 = vec1(0),
                 .probes = {vec1(0), vec1(0.5), vec1(1), vec1(1.5), vec1(2),
                            vec1(2.5), vec1(3)}};
  fx.fenchel = std::move(fd);

  fx.expectations.push_back(
      {"dr-map-spot", Suite::duality, [pair]() {
         const double r = std::abs(douglas_rachford_apply(pair, vec1(5))[0] - 4.0);
         return residual_check("dr-map-spot", "T(5) = 5 - P_U(5) + P_V(2 P_U(5) - 5) = 4",
                               r, 1e-12);
       }});
  fx.expectations.push_back(
      {"recover-spot", Suite::paramonotone, [pair]() {
         const auto got = recover_z_from_dual(
             pair, vec1(0),
             {vec1(0), vec1(0.5), vec1(1), vec1(1.5), vec1(2), vec1(2.5), vec1(3)});
         const bool ok = got.size() == 3 && got[0][0] == 1.0 && got[1][0] == 1.5 &&
                         got[2][0] == 2.0;
         return verdict_check("recover-spot",
                              "dual witness 0 classifies probes onto [1,2]", true, ok);
       }});
  return fx;
}

Fixture make_ww_nested() {
  ConvexSet v = box_set(vec2(-kInf, 0), vec2(kInf, 0), "R x {0}");
  DualPair pair(skew_plus_normal_cone_ww(), normal_cone_operator(v));
  Fixture fx("ww-nested",
             "halfplane normal cone plus rotation, against the "
             "horizontal axis: the dual-solution sets K_z grow "
             "strictly with z, so they neither coincide nor "
             "separate",
             pair);
  fx.solutions.z_set = v;
  fx.solutions.k_set = box_set(vec2(0, -kInf), vec2(0, kInf), "{0} x R");
  fx.solutions.sample_pair = [](Rng& rng) {
    const double xi = rng.uniform(-5.0, 5.0);
    const double s = xi - rng.uniform(0.0, 5.0);
    return std::make_pair(vec2(xi, 0), vec2(0, s));
  };
  fx.solutions.sample_z = {vec2(1, 0), vec2(2, 0), vec2(-1, 0)};
  fx.solutions.sample_k = {vec2(0, 0.5), vec2(0, 1), vec2(0, -4)};
  fx.fix_t = halfspace_set(vec2(-1, 1), 0.0, "{x2 <= x1}");
  fx.common_zero = vec2(1, 0);

  fx.expectations.push_back(
      {"k-nesting-inner", Suite::duality, [pair]() {
         return verdict_check("k-nesting-inner", "(0,0.5) lies in K_{(2,0)}", true,
                              kz_contains(pair, vec2(2, 0), vec2(0, 0.5)));
       }});
  fx.expectations.push_back(
      {"k-nesting-outer", Suite::duality, [pair]() {
         return verdict_check("k-nesting-outer", "(0,1.5) is outside K_{(1,0)}",
                              false, kz_contains(pair, vec2(1, 0), vec2(0, 1.5)));
       }});
  fx.expectations.push_back(
      {"k-nesting-strict", Suite::duality, [pair]() {
         // The midpoint level (xi+eta)/2 witnesses K_{(1,0)} strictly inside
         // K_{(2,0)}.
         const bool in_larger = kz_contains(pair, vec2(2, 0), vec2(0, 1.5));
         const bool in_smaller = kz_contains(pair, vec2(1, 0), vec2(0, 1.5));
         return verdict_check("k-nesting-strict",
                              "(0,1.5) lies in K_{(2,0)} but not K_{(1,0)}", true,
                              in_larger && !in_smaller);
       }});
  fx.expectations.push_back(
      {"vertical-ray-values", Suite::duality, [pair]() {
         // A(xi, 0) = {0} x (-inf, xi].
         bool ok = graph_contains(pair.a(), vec2(1, 0), vec2(0, 1)) &&
                   graph_contains(pair.a(), vec2(1, 0), vec2(0, 0.5)) &&
                   graph_contains(pair.a(), vec2(1, 0), vec2(0, -3)) &&
                   !graph_contains(pair.a(), vec2(1, 0), vec2(0, 1.2));
         return verdict_check("vertical-ray-values",
                              "values along the boundary are the rays "
                              "{0} x (-inf, x1]",
                              true, ok);
       }});
  return fx;
}

Fixture make_orthogonal_2d() {
  ConvexSet u = box_set(vec2(-kInf, 0), vec2(kInf, 0), "R x {0}");
  ConvexSet v = box_set(vec2(0, 0), vec2(kInf, 0), "R+ x {0}");
  DualPair pair(normal_cone_operator(u), normal_cone_operator(v));
  Fixture fx("orthogonal-2d",
             "feasibility on the horizontal axis against its "
             "nonnegative half: Z = R+ x {0} and K = {0} x R "
             "are orthogonal lines, the model case for the "
             "projection formulas",
             pair);
  fx.solutions.z_set = v;
  fx.solutions.k_set = box_set(vec2(0, -kInf), vec2(0, kInf), "{0} x R");
  fx.solutions.sample_pair = [](Rng& rng) {
    return std::make_pair(vec2(rng.uniform(0.0, 5.0), 0),
                          vec2(0, rng.uniform(-5.0, 5.0)));
  };
  fx.solutions.sample_z = {vec2(0, 0), vec2(1, 0), vec2(3, 0)};
  fx.solutions.sample_k = {vec2(0, 1), vec2(0, -2), vec2(0, 0)};
  fx.fix_t = box_set(vec2(0, -kInf), vec2(kInf, kInf), "R+ x R");
  fx.u_set = u;
  fx.v_set = v;
  fx.common_zero = vec2(1, 0);

  const DualPair p = pair;
  const ConvexSet z_set = *fx.solutions.z_set;
  const ConvexSet k_set = *fx.solutions.k_set;
  fx.expectations.push_back(
      {"shadow-spot", Suite::projections, [p, z_set, k_set]() {
         const Vec got = shadow_projection(p, z_set, k_set, vec2(0, 0), vec2(-1, 2));
         const double r = (got - vec2(0, 0)).norm();
         return residual_check("shadow-spot",
                               "J_A P_{Z+K}(-1,2) = P_Z(-1,2) = (0,0)", r, 1e-12);
       }});
  fx.expectations.push_back(
      {"zplusk-spot", Suite::projections, [z_set, k_set]() {
         const Vec got =
             project_z_plus_k(z_set, k_set, vec2(1, 0), vec2(0, 1), vec2(-1, 2));
         return residual_check("zplusk-spot",
                               "P_Z(x-k0) + P_K(x-z0) = (0,2) at x = (-1,2)",
                               (got - vec2(0, 2)).norm(), 1e-12);
       }});
  const ConvexSet uu = u, vv = v;
  const ConvexSet fixt = *fx.fix_t;
  fx.expectations.push_back(
      {"summerland-spot", Suite::projections, [uu, vv, fixt]() {
         const auto [via_fix, direct] = summerland_check(uu, vv, fixt, vec2(-1, 2));
         const double r = std::max((via_fix - vec2(0, 0)).norm(),
                                   (direct - vec2(0, 0)).norm());
         return residual_check("summerland-spot",
                               "P_U P_{Fix T}(-1,2) = P_{U∩V}(-1,2) = (0,0)", r,
                               1e-12);
       }});
  return fx;
}

Fixture make_hinge() {
  ProxFunction f = separable_pwl({hinge_pwl(1.0)}, "max(0,x-1)");
  ProxFunction g = separable_pwl(
      {Pwl1D(-kInf, kInf, {-1.0}, {-1.0, 0.0}, -1.0, 0.0)}, "max(0,-x-1)");
  DualPair pair(prox_operator(f), prox_operator(g));
  Fixture fx("hinge",
             "two mirrored hinge losses: the objective f + g "
             "is flat on [-1,1], the dual problem pins k = 0",
             pair);
  fx.solutions.z_set = box_set(vec1(-1), vec1(1), "[-1,1]");
  fx.solutions.k_set = singleton_set(vec1(0), "{0}");
  fx.solutions.sample_pair = [](Rng& rng) {
    return std::make_pair(vec1(rng.uniform(-1.0, 1.0)), vec1(0.0));
  };
  fx.solutions.sample_z = {vec1(-1), vec1(0), vec1(1)};
  fx.solutions.sample_k = {vec1(0), vec1(0), vec1(0)};
  fx.fix_t = fx.solutions.z_set;
  fx.common_zero = vec1(0);

  FenchelData fd{.f = f,
                 .g = g,
                 .box_lo = vec1(-3),
                 .box_hi = vec1(3),
                 .spacing = 1e-3,
                 .expected_primal_value = 0.0,
                 .recover_k0 = vec1(0),
                 .probes = {vec1(-2), vec1(-1), vec1(0), vec1(1), vec1(2)}};
  fx.fenchel = std::move(fd);

  fx.expectations.push_back(
      {"recover-spot", Suite::fenchel, [pair]() {
         const auto got = recover_z_from_dual(
             pair, vec1(0), {vec1(-2), vec1(-1), vec1(0), vec1(1), vec1(2)});
         const bool ok = got.size() == 3 && got[0][0] == -1.0 && got[1][0] == 0.0 &&
                         got[2][0] == 1.0;
         return verdict_check("recover-spot",
                              "dual witness 0 classifies probes onto [-1,1]",
                              true, ok);
       }});
  fx.expectations.push_back(
      {"prox-spot", Suite::identities, [f, g]() {
         const double r = std::max(std::abs(f.prox(vec1(3))[0] - 2.0),
                                   std::abs(g.prox(vec1(-3))[0] + 2.0));
         return residual_check("prox-spot", "prox of the hinge at 3 is 2", r, 0.0);
       }});
  return fx;
}

Fixture make_constant_pair() {
  const Vec u = vec2(1, -0.5);
  DualPair pair(constant_operator(u), constant_operator(-u));
  Fixture fx("constant-pair",
             "a constant operator against its negation: the sum "
             "vanishes identically, Z = R^2 while K is the "
             "single point u (not orthogonal to Z - Z)",
             pair);
  fx.solutions.z_set = box_set(vec2(-kInf, -kInf), vec2(kInf, kInf), "R^2");
  fx.solutions.k_set = singleton_set(u, "{u}");
  fx.solutions.sample_pair = [u](Rng& rng) {
    return std::make_pair(rng.point_in_cube(2, 5.0), u);
  };
  fx.solutions.sample_z = {vec2(0, 0), vec2(3, 4)};
  fx.solutions.sample_k = {u, u};
  fx.fix_t = fx.solutions.z_set;  // T = Id

  fx.expectations.push_back(
      {"k-is-singleton", Suite::duality, [pair, u]() {
         const bool ok = kz_contains(pair, vec2(3, 4), u) &&
                         !kz_contains(pair, vec2(3, 4), u + vec2(0.1, 0));
         return verdict_check("k-is-singleton", "K = {u} and nothing else", true, ok);
       }});
  fx.expectations.push_back(
      {"zero-in-k-guard", Suite::projections,
       [z_set = *fx.solutions.z_set, k_set = *fx.solutions.k_set]() {
         // (Z - Z) ⊥ K fails because 0 is not a dual solution here.
         bool threw = false;
         try {
           project_z_plus_k_zero_in_k(z_set, k_set, vec2(0, 0), vec2(2, 2));
         } catch (const std::invalid_argument&) {
           threw = true;
         }
         return verdict_check("zero-in-k-guard",
                              "the (Z-Z) ⊥ K variant must reject this fixture",
                              true, threw);
       }});
  fx.expectations.push_back(
      {"zero-in-z-variant", Suite::projections,
       [z_set = *fx.solutions.z_set, k_set = *fx.solutions.k_set, u]() {
         // Z ⊥ (K - K) holds trivially (K is a singleton).
         const Vec x = vec2(2.5, -3);
         const Vec got = project_z_plus_k_zero_in_z(z_set, k_set, u, x);
         return residual_check("zero-in-z-variant",
                               "P_Z(x-k0) + P_K(x) = x when Z is the whole space",
                               (got - x).norm(), 1e-12);
       }});
  return fx;
}

Fixture make_lcl_composed() {
  ConvexSet halfline = box_set(vec1(0), vec1(kInf), "R+");
  ResolventOperator c = normal_cone_operator(halfline);
  Mat l(1, 2);
  l << 2, 0;  // L L^T = 4, exercises the scaled-resolvent path
  ResolventOperator a = composed_lcl(c, l);
  ConvexSet v = box_set(vec2(-3, -1), vec2(1, 2), "[-3,1]x[-1,2]");
  DualPair pair(a, normal_cone_operator(v));
  Fixture fx("lcl-composed",
             "a 1-D normal cone lifted through a row matrix L "
             "with L L^T = 4 Id, paired with a box: the lift "
             "keeps exact resolvents and inherits "
             "paramonotonicity",
             pair);
  fx.solutions.z_set = box_set(vec2(0, -1), vec2(1, 2), "[0,1]x[-1,2]");
  fx.solutions.k_set = singleton_set(vec2(0, 0), "{0}");
  fx.solutions.sample_pair = [](Rng& rng) {
    return std::make_pair(vec2(rng.uniform(0.0, 1.0), rng.uniform(-1.0, 2.0)),
                          vec2(0, 0));
  };
  fx.solutions.sample_z = {vec2(0, 0), vec2(1, 2), vec2(0.5, -1)};
  fx.solutions.sample_k = {vec2(0, 0), vec2(0, 0), vec2(0, 0)};
  fx.fix_t = fx.solutions.z_set;
  fx.u_set = box_set(vec2(0, -kInf), vec2(kInf, kInf), "R+ x R");
  fx.v_set = v;
  fx.common_zero = vec2(0.5, 0);

  fx.expectations.push_back(
      {"composed-resolvent-spot", Suite::identities, [a]() {
         const double r = (a.resolvent(vec2(-1, 5)) - vec2(0, 5)).norm();
         return residual_check("composed-resolvent-spot",
                               "the lifted resolvent projects onto R+ x R", r,
                               1e-12);
       }});
  fx.expectations.push_back(
      {"composed-flag-transfer", Suite::paramonotone, [c]() {
         Mat id2 = Mat::Identity(2, 2);
         Mat row(1, 2);
         row << 1, 0;
         const bool from_cone = composed_lcl(c, row).paramonotone();
         const bool from_rotator =
             composed_lcl(rotator_operator(-M_PI_2), id2).paramonotone();
         return verdict_check("composed-flag-transfer",
                              "lifting preserves the paramonotone flag", true,
                              from_cone && !from_rotator);
       }});
  fx.expectations.push_back(
      {"linear-classifier", Suite::paramonotone, []() {
         Mat rot(2, 2), diag(2, 2);
         rot << 0, 1, -1, 0;
         diag << 1, 0, 0, 0;
         const bool ok = !is_paramonotone_linear(rot) &&
                         is_paramonotone_linear(Mat::Identity(2, 2)) &&
                         is_paramonotone_linear(diag);
         return verdict_check("linear-classifier",
                              "kernel test separates the rotator from PSD "
                              "matrices",
                              true, ok);
       }});
  return fx;
}

Fixture make_dual_of_infeasible() {
  ConvexSet w = box_set(vec1(1), vec1(kInf), "[1,inf)");
  ResolventOperator nw = normal_cone_operator(w);
  DualPair pair(inverse(nw), neg_ovee_inverse(nw));
  Fixture fx("dual-of-infeasible",
             "the dual pair of a feasibility problem whose "
             "intersection misses the origin: Z collapses to "
             "{0} while K = [1,inf) stays away from 0",
             pair);
  fx.solutions.z_set = singleton_set(vec1(0), "{0}");
  fx.solutions.k_set = w;
  fx.solutions.sample_pair = [](Rng& rng) {
    return std::make_pair(vec1(0.0), vec1(1.0 + rng.uniform(0.0, 4.0)));
  };
  fx.solutions.sample_z = {vec1(0), vec1(0)};
  fx.solutions.sample_k = {vec1(1), vec1(2.5)};
  fx.fix_t = w;  // Z + K = [1, inf)

  fx.expectations.push_back(
      {"z-recover", Suite::paramonotone, [pair]() {
         const auto got = recover_z_from_dual(
             pair, vec1(1.5), {vec1(-1), vec1(-0.5), vec1(0), vec1(0.5), vec1(1)});
         const bool ok = got.size() == 1 && got[0][0] == 0.0;
         return verdict_check("z-recover", "only the origin survives recovery",
                              true, ok);
       }});
  fx.expectations.push_back(
      {"shadow-spot", Suite::projections,
       [pair, z_set = *fx.solutions.z_set, k_set = *fx.solutions.k_set]() {
         const Vec got = shadow_projection(pair, z_set, k_set, vec1(2), vec1(-7));
         return residual_check("shadow-spot",
                               "J_A P_{Z+K}(-7) = P_Z(-7 - k0) = 0",
                               std::abs(got[0]), 1e-12);
       }});
  return fx;
}

}  // namespace

const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> registry = [] {
    std::vector<Fixture> v;
    v.push_back(make_skewskew());
    v.push_back(make_normskew());
    v.push_back(make_feasibility_1d());
    v.push_back(make_ww_nested());
    v.push_back(make_orthogonal_2d());
    v.push_back(make_hinge());
    v.push_back(make_constant_pair());
    v.push_back(make_lcl_composed());
    v.push_back(make_dual_of_infeasible());
    return v;
  }();
  return registry;
}

const Fixture& find_fixture(const std::string& name, const std::vector<Fixture>& extra) {
  for (const Fixture& fx : fixture_registry()) {
    if (fx.name == name) return fx;
  }
  for (const Fixture& fx : extra) {
    if (fx.name == name) return fx;
  }
  throw UsageError("unknown fixture: " + name);
}

std::vector<std::string> fixture_names(const std::vector<Fixture>& extra) {
  std::vector<std::string> names;
  for (const Fixture& fx : fixture_registry()) names.push_back(fx.name);
  for (const Fixture& fx : extra) names.push_back(fx.name);
  return names;
}

std::vector<Check> validate_fixture(const Fixture& fx, int samples, std::uint64_t seed) {
  std::vector<Check> checks;
  checks.push_back(residual_check(
      "firmly-nonexpansive-a", "J_A is firmly nonexpansive on sampled pairs",
      std::max(0.0, firm_nonexpansiveness_defect(fx.pair.a(), samples, seed)), 1e-10));
  checks.push_back(residual_check(
      "firmly-nonexpansive-b", "J_B is firmly nonexpansive on sampled pairs",
      std::max(0.0, firm_nonexpansiveness_defect(fx.pair.b(), samples, seed + 1)),
      1e-10));

  double member_defect = 0.0;
  for (std::size_t i = 0; i < fx.solutions.sample_z.size(); ++i) {
    const Vec& z = fx.solutions.sample_z[i];
    const Vec& k = fx.solutions.sample_k[i];
    member_defect = std::max(
        member_defect, (fx.pair.a().resolvent(z + k) - z).norm());
    member_defect = std::max(
        member_defect, (fx.pair.b().resolvent(z - k) - z).norm());
  }
  checks.push_back(residual_check("declared-samples",
                                  "declared (z, k) samples lie in gr K",
                                  member_defect, 1e-9));

  if (fx.fix_t) {
    Rng rng(seed + 2);
    double fix_defect = 0.0;
    for (int i = 0; i < std::min(samples, 100); ++i) {
      const Vec x = fx.fix_t->project(rng.point_in_cube(fx.pair.dim(), 8.0));
      fix_defect = std::max(fix_defect,
                            (douglas_rachford_apply(fx.pair, x) - x).norm());
    }
    checks.push_back(residual_check("fix-t-residual",
                                    "declared Fix T points are fixed points",
                                    fix_defect, 1e-10));
  }
  return checks;
}

namespace {

using nlohmann::json;

Vec vec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw UsageError("expected a nonempty number array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

ResolventOperator operator_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw UsageError("operator AST: expected an object with a 'kind' field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "normal_cone_box") {
    Vec lo = vec_from_json(j.at("lo"));
    Vec hi = vec_from_json(j.at("hi"));
    return normal_cone_operator(box_set(std::move(lo), std::move(hi)));
  }
  if (kind == "linear") {
    const auto rows = j.at("matrix");
    if (!rows.is_array()) throw UsageError("linear operator: 'matrix' must be an array");
    Vec flat = vec_from_json(rows);
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(
        static_cast<double>(flat.size()))));
    if (n * n != flat.size()) {
      throw UsageError("linear operator: row-major 'matrix' must be square");
    }
    Mat m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) m(r, c) = flat[r * n + c];
    return linear_operator(m);
  }
  if (kind == "constant") return constant_operator(vec_from_json(j.at("u")));
  if (kind == "ww_example") return skew_plus_normal_cone_ww();
  if (kind == "prox_hinge") {
    std::vector<double> breaks, slopes;
    for (const auto& b : j.at("breakpoints")) breaks.push_back(b.get<double>());
    for (const auto& s : j.at("slopes")) slopes.push_back(s.get<double>());
    double lo = -kInf, hi = kInf;
    if (j.contains("domain")) {
      lo = j.at("domain").at(0).get<double>();
      hi = j.at("domain").at(1).get<double>();
    }
    const double anchor =
        breaks.empty() ? (std::isfinite(lo) ? lo : std::isfinite(hi) ? hi : 0.0)
                       : breaks.front();
    return prox_operator(
        separable_pwl({Pwl1D(lo, hi, breaks, slopes, anchor, 0.0)}, "user-pwl"));
  }
  if (kind == "inverse") return inverse(operator_from_json(j.at("of")));
  if (kind == "ovee") return ovee(operator_from_json(j.at("of")));
  if (kind == "neg_ovee") return neg_ovee_inverse(operator_from_json(j.at("of")));
  if (kind == "composed_lcl") {
    ResolventOperator c = operator_from_json(j.at("c"));
    const auto rows = j.at("l");
    if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
      throw UsageError("composed_lcl: 'l' must be an array of rows");
    }
    Mat l(static_cast<Eigen::Index>(rows.size()),
          static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t cidx = 0; cidx < rows[r].size(); ++cidx)
        l(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cidx)) =
            rows[r][cidx].get<double>();
    return composed_lcl(c, l);
  }
  throw UsageError("operator AST: unknown kind '" + kind + "'");
}

}  // namespace

ResolventOperator parse_operator_ast(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("operator AST: bad JSON: ") + e.what());
  }
  return operator_from_json(j);
}

std::vector<Fixture> load_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open fixture file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UsageError(std::string("fixture file: bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("fixtures") || !doc["fixtures"].is_array()) {
    throw UsageError("fixture file: expected {\"fixtures\": [...]}");
  }
  std::vector<Fixture> out;
  for (const json& jf : doc["fixtures"]) {
    if (!jf.contains("name") || !jf.contains("operator_a") || !jf.contains("operator_b")) {
      throw UsageError("fixture file: each entry needs name, operator_a, operator_b");
    }
    ResolventOperator a = operator_from_json(jf.at("operator_a"));
    ResolventOperator b = operator_from_json(jf.at("operator_b"));
    if (jf.contains("dim")) {
      const auto dim = jf.at("dim").get<Eigen::Index>();
      if (a.dim() != dim || b.dim() != dim) {
        throw UsageError("fixture file: declared dim disagrees with operators");
      }
    }
    Fixture fx(jf.at("name").get<std::string>(),
               jf.value("description", std::string("user fixture")),
               DualPair(std::move(a), std::move(b)));
    if (jf.contains("solution_samples")) {
      const json& ss = jf.at("solution_samples");
      if (ss.contains("z")) {
        for (const auto& zj : ss.at("z")) fx.solutions.sample_z.push_back(vec_from_json(zj));
      }
      if (ss.contains("k")) {
        for (const auto& kj : ss.at("k")) fx.solutions.sample_k.push_back(vec_from_json(kj));
      }
      if (fx.solutions.sample_z.size() != fx.solutions.sample_k.size()) {
        throw UsageError("fixture file: z and k sample lists must align");
      }
    }
    out.push_back(std::move(fx));
  }
  return out;
}

}  // namespace atd
