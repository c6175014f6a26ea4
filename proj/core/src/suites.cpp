#include "atd/suites.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "atd/bestapprox.hpp"
#include "atd/splitting.hpp"

namespace atd {

namespace {

using PairSample = std::pair<Vec, Vec>;

std::vector<PairSample> draw_solution_pairs(const Fixture& fx, Rng& rng, int count) {
  std::vector<PairSample> out;
  if (fx.solutions.sample_pair) {
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(fx.solutions.sample_pair(rng));
  } else if (!fx.solutions.sample_z.empty()) {
    for (int i = 0; i < count; ++i) {
      const std::size_t j = static_cast<std::size_t>(i) % fx.solutions.sample_z.size();
      out.emplace_back(fx.solutions.sample_z[j], fx.solutions.sample_k[j]);
    }
  }
  return out;
}

/// Membership defect of (z, k) in gr K: exact zero means k in Az, -k in Bz.
double pair_defect(const DualPair& p, const Vec& z, const Vec& k) {
  return std::max((p.a().resolvent(z + k) - z).norm(),
                  (p.b().resolvent(z - k) - z).norm());
}

void add_operator_identities(const std::string& tag, const ResolventOperator& op,
                             int samples, Rng& rng, std::vector<Check>& out) {
  const ResolventOperator inv = inverse(op);
  const ResolventOperator ov = ovee(op);
  const ResolventOperator ovov = ovee(ov);
  const ResolventOperator ovinv = ovee(inv);
  const ResolventOperator invov = inverse(ov);
  const ResolventOperator negov = neg_ovee_inverse(op);

  double inv_identity = 0.0, refl_negation = 0.0, ovee_conj = 0.0;
  double ovee_invol = 0.0, commute = 0.0, negov_refl = 0.0;
  double minty_sum = 0.0, minty_member = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec x = rng.point_in_cube(op.dim(), 5.0);
    inv_identity = std::max(inv_identity,
                            (op.resolvent(x) + inv.resolvent(x) - x).norm());
    refl_negation = std::max(
        refl_negation,
        (inv.reflected_resolvent(x) + op.reflected_resolvent(x)).norm());
    ovee_conj = std::max(ovee_conj, (ov.resolvent(x) + op.resolvent(-x)).norm());
    ovee_invol = std::max(ovee_invol, (ovov.resolvent(x) - op.resolvent(x)).norm());
    commute = std::max(commute, (ovinv.resolvent(x) - invov.resolvent(x)).norm());
    negov_refl = std::max(
        negov_refl,
        (negov.reflected_resolvent(x) - (x + 2.0 * op.resolvent(-x))).norm());
    const auto [a, astar] = minty_param(op, x);
    // Normalized by scale: a + (x - a) reproduces x to the resolution of
    // double addition (bitwise for projection-type resolvents).
    minty_sum = std::max(minty_sum, (a + astar - x).lpNorm<Eigen::Infinity>() /
                                        std::max(1.0, x.lpNorm<Eigen::Infinity>()));
    minty_member = std::max(minty_member, (op.resolvent(a + astar) - a).norm());
  }
  out.push_back(residual_check("firmly-nonexpansive-" + tag,
                               "the resolvent is firmly nonexpansive",
                               std::max(0.0, firm_nonexpansiveness_defect(
                                                 op, samples, rng.next_u64(), 5.0)),
                               1e-10));
  out.push_back(residual_check("inverse-identity-" + tag,
                               "J_A + J_{A^-1} = Id", inv_identity, 1e-12));
  out.push_back(residual_check("reflected-inverse-" + tag,
                               "R_{A^-1} = -R_A", refl_negation, 1e-12));
  out.push_back(residual_check("ovee-conjugation-" + tag,
                               "J_{A^v} = -J_A(-.)", ovee_conj, 1e-12));
  out.push_back(residual_check("ovee-involution-" + tag,
                               "(A^v)^v has the resolvent of A", ovee_invol, 1e-12));
  out.push_back(residual_check("inverse-ovee-commute-" + tag,
                               "(A^-1)^v = (A^v)^-1 pointwise", commute, 1e-12));
  out.push_back(residual_check("neg-ovee-reflected-" + tag,
                               "R_{A^{-v}} = Id + 2 J_A(-.)", negov_refl, 1e-12));
  out.push_back(residual_check("minty-sum-exact-" + tag,
                               "the graph point through x sums back to x at "
                               "machine resolution",
                               minty_sum, 4.0 * std::numeric_limits<double>::epsilon()));
  out.push_back(residual_check("minty-membership-" + tag,
                               "(J_A x, x - J_A x) passes graph membership",
                               minty_member, 1e-9));
}

void add_identities_suite(const Fixture& fx, int samples, Rng& rng,
                          std::vector<Check>& out) {
  add_operator_identities("a", fx.pair.a(), samples, rng, out);
  add_operator_identities("b", fx.pair.b(), samples, rng, out);

  const SplittingOperator t = dr_operator(fx.pair);
  const SplittingOperator t_dual = dr_operator(fx.pair.dual());
  const DualPair bidual = fx.pair.dual().dual();
  double formula_eq = 0.0, dr_selfdual = 0.0, pr_selfdual = 0.0, biduality = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec x = rng.point_in_cube(fx.pair.dim(), 5.0);
    formula_eq = std::max(formula_eq,
                          (t.apply_reflection_form(x) - t.apply(x)).norm());
    dr_selfdual = std::max(dr_selfdual, (t.apply(x) - t_dual.apply(x)).norm());
    const Vec pr = fx.pair.b().reflected_resolvent(fx.pair.a().reflected_resolvent(x));
    const Vec pr_dual = fx.pair.dual_b().reflected_resolvent(
        fx.pair.dual_a().reflected_resolvent(x));
    pr_selfdual = std::max(pr_selfdual, (pr - pr_dual).norm());
    biduality = std::max(
        {biduality, (bidual.a().resolvent(x) - fx.pair.a().resolvent(x)).norm(),
         (bidual.b().resolvent(x) - fx.pair.b().resolvent(x)).norm()});
  }
  out.push_back(residual_check("dr-formula-equivalence",
                               "(Id + R_B R_A)/2 = J_B R_A + Id - J_A",
                               formula_eq, 1e-12));
  out.push_back(residual_check("dr-self-duality",
                               "T of the pair equals T of the dual pair",
                               dr_selfdual, 1e-11));
  out.push_back(residual_check("pr-self-duality",
                               "R_B R_A equals its dual-pair counterpart",
                               pr_selfdual, 1e-11));
  out.push_back(residual_check("biduality",
                               "the dual of the dual pair is the pair",
                               biduality, 1e-12));
}

void add_duality_suite(const Fixture& fx, int samples, Rng& rng,
                       std::vector<Check>& out) {
  const auto pairs = draw_solution_pairs(fx, rng, samples);

  double membership = 0.0, psi_fix = 0.0, passty = 0.0, convexity = 0.0;
  int equivalence_mismatches = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [z, k] = pairs[i];
    membership = std::max(membership, pair_defect(fx.pair, z, k));
    psi_fix = std::max(psi_fix,
                       (douglas_rachford_apply(fx.pair, z + k) - (z + k)).norm());
    if (kz_contains(fx.pair, z, k) != zk_contains(fx.pair, k, z)) {
      ++equivalence_mismatches;
    }
    // Perturbed points must keep the two membership routes in agreement too.
    const Vec zp = z + rng.point_in_cube(fx.pair.dim(), 0.7);
    if (kz_contains(fx.pair, zp, k) != zk_contains(fx.pair, k, zp)) {
      ++equivalence_mismatches;
    }
    if (i + 1 < pairs.size()) {
      const auto& [z2, k2] = pairs[i + 1];
      passty = std::max(passty, std::abs((k - k2).dot(z - z2)));
      for (double tmix : {0.25, 0.5, 0.75}) {
        const Vec zt = (1.0 - tmix) * z + tmix * z2;
        const Vec kt = (1.0 - tmix) * k + tmix * k2;
        convexity = std::max(convexity, pair_defect(fx.pair, zt, kt));
      }
    }
  }
  out.push_back(residual_check("solution-pair-membership",
                               "sampled (z, k) pairs lie in gr K", membership,
                               1e-9));
  out.push_back(verdict_check("membership-route-equivalence",
                              "k in K_z iff z in Z_k, on both sampled and "
                              "perturbed points",
                              true, equivalence_mismatches == 0));
  out.push_back(residual_check("psi-fixed-point",
                               "z + k is a fixed point of T for every solution "
                               "pair",
                               psi_fix, 1e-10));
  out.push_back(residual_check("passty-orthogonality",
                               "<k1 - k2, z1 - z2> vanishes on solution pairs",
                               passty, 1e-10));
  out.push_back(residual_check("graph-convexity",
                               "convex combinations of solution pairs stay in "
                               "gr K",
                               convexity, 1e-8));

  if (fx.fix_t) {
    double fix_res = 0.0, roundtrip = 0.0, inv_membership = 0.0;
    for (int i = 0; i < samples; ++i) {
      const Vec x = fx.fix_t->project(rng.point_in_cube(fx.pair.dim(), 8.0));
      fix_res = std::max(fix_res, (douglas_rachford_apply(fx.pair, x) - x).norm());
      const auto [z, k] = psi_inverse(fx.pair, x, 1e-7);
      roundtrip = std::max(roundtrip,
                           (psi(fx.pair, z, k) - x).lpNorm<Eigen::Infinity>() /
                               std::max(1.0, x.lpNorm<Eigen::Infinity>()));
      inv_membership = std::max(inv_membership, pair_defect(fx.pair, z, k));
    }
    out.push_back(residual_check("fix-t-residual",
                                 "declared Fix T points have zero residual",
                                 fix_res, 1e-10));
    out.push_back(residual_check("psi-roundtrip",
                                 "psi(psi_inverse(x)) returns x at machine "
                                 "resolution on Fix T",
                                 roundtrip,
                                 4.0 * std::numeric_limits<double>::epsilon()));
    out.push_back(residual_check("psi-inverse-membership",
                                 "psi_inverse lands in gr K", inv_membership,
                                 1e-9));
  }

  if (fx.solutions.z_set && fx.solutions.k_set) {
    double truth = 0.0;
    for (const auto& [z, k] : pairs) {
      truth = std::max({truth, fx.solutions.z_set->distance(z),
                        fx.solutions.k_set->distance(k)});
    }
    out.push_back(residual_check("solutions-in-ground-truth",
                                 "sampled solutions lie in the declared Z and K",
                                 truth, 1e-9));
    const bool zero_dual = fx.solutions.k_set->contains(Vec::Zero(fx.pair.dim()), 1e-9);
    bool witness_ok = true;
    if (fx.common_zero) {
      witness_ok = kz_contains(fx.pair, *fx.common_zero, Vec::Zero(fx.pair.dim()));
    }
    out.push_back(verdict_check("common-zero-iff-zero-dual",
                                "0 is a dual solution exactly when the zero "
                                "sets of A and B meet",
                                fx.common_zero.has_value(), zero_dual && witness_ok));
  }
}

void add_paramonotone_suite(const Fixture& fx, int samples, Rng& rng,
                            std::vector<Check>& out) {
  const auto pairs = draw_solution_pairs(fx, rng, samples);

  if (fx.expect_rectangle_failure) {
    // Expect-failure mode: the rectangle property must break somewhere.
    bool any_cross_failure = false;
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
      const auto& [z1, k1] = pairs[i];
      const auto& [z2, k2] = pairs[i + 1];
      if ((k1 - k2).norm() < 1e-9) continue;  // same dual point, cross is trivial
      if (!kz_contains(fx.pair, z1, k2) || !kz_contains(fx.pair, z2, k1)) {
        any_cross_failure = true;
        break;
      }
    }
    out.push_back(verdict_check("rectangle-expected-failure",
                                "without paramonotonicity some cross pair "
                                "must leave gr K",
                                true, any_cross_failure));
    return;
  }

  double cross = 0.0;
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    const auto& [z1, k1] = pairs[i];
    const auto& [z2, k2] = pairs[i + 1];
    cross = std::max({cross, pair_defect(fx.pair, z1, k2),
                      pair_defect(fx.pair, z2, k1)});
  }
  out.push_back(residual_check("rectangle-cross-membership",
                               "gr K is the full rectangle Z x K", cross, 1e-9));

  const bool flags =
      inverse(fx.pair.a()).paramonotone() && ovee(fx.pair.a()).paramonotone() &&
      neg_ovee_inverse(fx.pair.b()).paramonotone() &&
      fx.pair.dual().paramonotone();
  out.push_back(verdict_check("flag-propagation",
                              "paramonotonicity survives inverse, ovee and "
                              "the dual pair",
                              true, flags));

  if (fx.solutions.z_set && fx.solutions.k_set && !pairs.empty()) {
    const Vec k0 = pairs.front().second;
    int mismatches = 0;
    for (int i = 0; i < samples; ++i) {
      Vec probe = fx.solutions.z_set->project(rng.point_in_cube(fx.pair.dim(), 5.0));
      if (i % 2 == 1) probe += rng.point_in_cube(fx.pair.dim(), 2.0);
      const bool truth = fx.solutions.z_set->contains(probe, 1e-9);
      const bool recovered = !recover_z_from_dual(fx.pair, k0, {probe}).empty();
      if (truth != recovered) ++mismatches;
    }
    out.push_back(verdict_check("recovery-classifies-probes",
                                "one dual solution recovers exactly the "
                                "primal solution set",
                                true, mismatches == 0));
  }
}

void add_projections_suite(const Fixture& fx, int samples, Rng& rng,
                           std::vector<Check>& out) {
  const ConvexSet& z_set = *fx.solutions.z_set;
  const ConvexSet& k_set = *fx.solutions.k_set;
  const Eigen::Index d = fx.pair.dim();
  const Vec z0 = z_set.project(Vec::Zero(d));
  const Vec k0 = k_set.project(Vec::Zero(d));

  OrthoCheck guard;
  guard.seed = rng.next_u64();
  const bool zz_perp_k =
      orthogonality_defect(z_set, k_set, OrthoKind::diff_vs_set, guard) <= guard.tol;
  const bool z_perp_kk =
      orthogonality_defect(k_set, z_set, OrthoKind::diff_vs_set, guard) <= guard.tol;
  const bool z_perp_k =
      orthogonality_defect(z_set, k_set, OrthoKind::set_vs_set, guard) <= guard.tol;
  OrthoCheck no_guard;
  no_guard.skip = true;

  double base_vs_fixt = 0.0, in_k_agrees = 0.0, in_z_agrees = 0.0;
  double osum_agrees = 0.0, shadow = 0.0, shadow_k0free = 0.0, translate = 0.0;
  double summerland = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec x = rng.point_in_cube(d, 8.0);
    const Vec base = project_z_plus_k(z_set, k_set, z0, k0, x);
    if (fx.fix_t) {
      base_vs_fixt = std::max(base_vs_fixt, (base - fx.fix_t->project(x)).norm());
    }
    if (zz_perp_k) {
      in_k_agrees = std::max(
          in_k_agrees,
          (project_z_plus_k_zero_in_k(z_set, k_set, z0, x, no_guard) - base).norm());
    }
    if (z_perp_kk) {
      in_z_agrees = std::max(
          in_z_agrees,
          (project_z_plus_k_zero_in_z(z_set, k_set, k0, x, no_guard) - base).norm());
    }
    if (z_perp_k && fx.fix_t) {
      osum_agrees = std::max(
          osum_agrees,
          (project_orthogonal_sum(z_set, k_set, x, no_guard) - fx.fix_t->project(x))
              .norm());
    }

    const Vec k_draw = k_set.project(rng.point_in_cube(d, 5.0));
    const Vec got = shadow_projection(fx.pair, z_set, k_set, k_draw, x, 1e-8);
    shadow = std::max(shadow, (got - z_set.project(x - k_draw)).norm());
    // The left side never sees k0, so every choice must give the same value.
    shadow = std::max(shadow, (got - z_set.project(x - k0)).norm());
    if (zz_perp_k) {
      shadow_k0free = std::max(shadow_k0free, (got - z_set.project(x)).norm());
    }

    if (z_set.box()) {
      const Vec y = rng.point_in_cube(d, 3.0);
      const ConvexSet shifted =
          box_set(z_set.box()->lo + y, z_set.box()->hi + y, "shifted");
      translate = std::max(
          translate, (project_translate(z_set, y, x) - shifted.project(x)).norm());
    }

    if (fx.u_set && fx.v_set && fx.fix_t) {
      const auto [via_fix, direct] = summerland_check(*fx.u_set, *fx.v_set,
                                                      *fx.fix_t, x);
      summerland = std::max(summerland, (via_fix - direct).norm());
    }
  }

  if (fx.fix_t) {
    out.push_back(residual_check("zplusk-vs-direct",
                                 "P_Z(x-k0) + P_K(x-z0) projects onto Z + K "
                                 "= Fix T",
                                 base_vs_fixt, 1e-11));
  }
  if (zz_perp_k) {
    out.push_back(residual_check("zplusk-zero-in-k-agrees",
                                 "the (Z-Z) ⊥ K simplification matches the "
                                 "recentered formula",
                                 in_k_agrees, 1e-11));
  }
  if (z_perp_kk) {
    out.push_back(residual_check("zplusk-zero-in-z-agrees",
                                 "the Z ⊥ (K-K) simplification matches the "
                                 "recentered formula",
                                 in_z_agrees, 1e-11));
  }
  if (z_perp_k && fx.fix_t) {
    out.push_back(residual_check("orthogonal-sum-projection",
                                 "P_{Z+K} = P_Z + P_K for orthogonal Z, K",
                                 osum_agrees, 1e-11));
  }
  out.push_back(residual_check("shadow-projection",
                               "J_A P_{Z+K}(x) = P_Z(x - k0) for every dual "
                               "solution k0",
                               shadow, 1e-10));
  if (zz_perp_k) {
    out.push_back(residual_check("shadow-projection-k0-free",
                                 "J_A P_{Z+K} = P_Z when (Z-Z) ⊥ K",
                                 shadow_k0free, 1e-11));
  }
  if (z_set.box()) {
    out.push_back(residual_check("translate-formula",
                                 "P_{y+S}(x) = y + P_S(x-y)", translate, 1e-12));
  }
  if (fx.u_set && fx.v_set && fx.fix_t) {
    out.push_back(residual_check("summerland-composition",
                                 "P_U P_{Fix T} equals the direct projection "
                                 "onto U ∩ V",
                                 summerland, 1e-11));
  }

  // Abstract-algorithm consequence: any convergent splitting run has its
  // shadow limit equal to P_Z(limit - k) for every dual solution k.
  const SplittingOperator t = dr_operator(fx.pair);
  const IterationTrace trace = iterate_dr(t, rng.point_in_cube(d, 5.0), 1e-12, 20000);
  if (trace.converged) {
    double abstract_defect = 0.0;
    for (int j = 0; j < 3; ++j) {
      const Vec k = k_set.project(rng.point_in_cube(d, 5.0));
      abstract_defect = std::max(
          abstract_defect,
          (trace.last_shadow() - z_set.project(trace.last() - k)).norm());
    }
    out.push_back(residual_check("abstract-algorithm-shadow",
                                 "the shadow of a convergent run lands on "
                                 "P_Z(limit - k)",
                                 abstract_defect, 1e-9));
  }
}

void add_fenchel_suite(const Fixture& fx, int samples, Rng& rng,
                       std::vector<Check>& out) {
  const FenchelData& fd = *fx.fenchel;
  const TotalDualityReport tdr =
      total_duality_check(fd.f, fd.g, fd.box_lo, fd.box_hi, fd.spacing);

  out.push_back(residual_check("duality-gap",
                               "primal and dual optimal values cancel", tdr.gap,
                               1e-6));
  out.push_back(residual_check("primal-value",
                               "the grid oracle finds the known optimal value",
                               std::abs(tdr.primal_value - fd.expected_primal_value),
                               1e-6));
  out.push_back(residual_check("weak-duality",
                               "mu >= -mu* holds as an inequality",
                               std::max(0.0, -(tdr.primal_value + tdr.dual_value)),
                               1e-12));
  if (fx.solutions.z_set) {
    out.push_back(residual_check("primal-candidate-in-z",
                                 "the grid minimizer is a primal solution",
                                 fx.solutions.z_set->distance(tdr.primal_point),
                                 2e-3));
  }
  if (fx.solutions.k_set) {
    out.push_back(residual_check("dual-candidate-in-k",
                                 "the dual grid minimizer is a dual solution",
                                 fx.solutions.k_set->distance(tdr.dual_point),
                                 2e-3));
  }

  double moreau = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec x = rng.point_in_cube(fx.pair.dim(), 5.0);
    moreau = std::max(moreau,
                      (fd.f.prox(x) + fd.f.conjugate().prox(x) - x).norm());
    moreau = std::max(moreau,
                      (fd.g.prox(x) + fd.g.conjugate().prox(x) - x).norm());
  }
  out.push_back(residual_check("moreau-decomposition",
                               "prox_f + prox_{f*} = Id", moreau, 1e-12));

  if (fx.solutions.z_set && fx.pair.paramonotone()) {
    const auto recovered = recover_z_from_dual(fx.pair, fd.recover_k0, fd.probes);
    int mismatches = 0;
    std::size_t hit = 0;
    for (const Vec& probe : fd.probes) {
      const bool truth = fx.solutions.z_set->contains(probe, 1e-9);
      const bool got = hit < recovered.size() && (recovered[hit] - probe).norm() == 0.0;
      if (got) ++hit;
      if (truth != got) ++mismatches;
    }
    out.push_back(verdict_check("recovery-classifies-probes",
                                "the dual witness classifies the declared "
                                "probes onto Z",
                                true, mismatches == 0 && hit == recovered.size()));
  }
}

}  // namespace

void require_suite_applicable(const Fixture& fx, Suite suite) {
  switch (suite) {
    case Suite::identities:
    case Suite::duality:
      return;
    case Suite::paramonotone:
      if (!fx.pair.paramonotone() && !fx.expect_rectangle_failure) {
        throw UsageError("suite 'paramonotone' needs both paramonotone flags "
                         "(fixture '" + fx.name + "')");
      }
      return;
    case Suite::projections:
      if (!fx.has_ground_truth()) {
        throw UsageError("suite 'projections' needs ground-truth Z and K sets "
                         "(fixture '" + fx.name + "')");
      }
      if (!fx.pair.paramonotone()) {
        throw UsageError("suite 'projections' needs a paramonotone pair "
                         "(fixture '" + fx.name + "')");
      }
      return;
    case Suite::fenchel:
      if (!fx.fenchel) {
        throw UsageError("suite 'fenchel' needs a subdifferential pair with "
                         "registered conjugates (fixture '" + fx.name + "')");
      }
      return;
  }
}

Report run_suite(const Fixture& fx, Suite suite, int samples, std::uint64_t seed) {
  require_suite_applicable(fx, suite);
  if (samples < 1) throw UsageError("samples must be >= 1");

  Report report;
  report.fixture = fx.name;
  report.suite = to_string(suite);
  report.seed = seed;
  report.samples = samples;
  report.timestamp = current_timestamp_utc();

  Rng rng(seed);
  switch (suite) {
    case Suite::identities: add_identities_suite(fx, samples, rng, report.checks); break;
    case Suite::duality: add_duality_suite(fx, samples, rng, report.checks); break;
    case Suite::paramonotone: add_paramonotone_suite(fx, samples, rng, report.checks); break;
    case Suite::projections: add_projections_suite(fx, samples, rng, report.checks); break;
    case Suite::fenchel: add_fenchel_suite(fx, samples, rng, report.checks); break;
  }
  for (const Expectation& e : fx.expectations) {
    if (e.suite == suite) report.checks.push_back(e.run());
  }
  report.finalize();
  return report;
}

AlgorithmResult run_algorithm(const Fixture& fx, const AlgorithmOptions& options) {
  const Eigen::Index d = fx.pair.dim();
  if (!(options.tol > 0.0)) throw UsageError("tol must be positive");
  if (options.max_iter < 1) throw UsageError("max-iter must be >= 1");
  if (options.x0 && options.x0->size() != d) throw UsageError("x0 has the wrong dimension");
  if (options.anchor && options.anchor->size() != d) {
    throw UsageError("anchor has the wrong dimension");
  }

  const Vec anchor = options.anchor.value_or(options.x0.value_or(Vec::Zero(d)));
  const Vec x0 = options.x0.value_or(anchor);

  IterationTrace trace;
  switch (options.algorithm) {
    case Algorithm::dr:
      trace = iterate_dr(dr_operator(fx.pair), x0, options.tol, options.max_iter);
      break;
    case Algorithm::averaged: {
      const double lambda = options.lambda.value_or(1.0);
      if (!(lambda >= 0.0 && lambda <= 1.0)) throw UsageError("lambda must be in [0, 1]");
      trace = iterate_dr(averaged_operator(fx.pair, lambda), x0, options.tol,
                         options.max_iter);
      trace.algorithm = Algorithm::averaged;
      break;
    }
    case Algorithm::halpern:
      trace = iterate_halpern(dr_operator(fx.pair), x0, anchor, {}, options.tol,
                              options.max_iter);
      break;
    case Algorithm::haugazeau:
      trace = iterate_haugazeau(dr_operator(fx.pair), anchor, options.tol,
                                options.max_iter);
      break;
  }

  Report report;
  report.fixture = fx.name;
  report.suite = std::string("algorithm:") + summarize_trace(trace).algorithm;
  report.seed = 0;
  report.samples = trace.iterations_used;
  report.timestamp = current_timestamp_utc();

  report.checks.push_back(verdict_check("converged",
                                        "the run reached its stopping rule",
                                        true, trace.converged));
  report.checks.push_back(residual_check("final-fixed-point-residual",
                                         "||T x - x|| at the last iterate",
                                         trace.residuals.back(),
                                         10.0 * options.tol));

  const bool anchored = options.algorithm == Algorithm::halpern ||
                        options.algorithm == Algorithm::haugazeau;
  const double limit_tol = options.algorithm == Algorithm::halpern ? 1e-3 : 1e-6;
  if (fx.solutions.z_set && trace.converged) {
    report.checks.push_back(residual_check(
        "shadow-in-primal-set", "the shadow limit lies in Z",
        fx.solutions.z_set->distance(trace.last_shadow()), limit_tol));
  }
  if (anchored && fx.fix_t && trace.converged) {
    report.checks.push_back(residual_check(
        "limit-is-nearest-fixed-point", "the limit is P_{Fix T}(anchor)",
        (trace.last() - fx.fix_t->project(anchor)).norm(), limit_tol));
  }
  if (anchored && fx.has_ground_truth() && trace.converged) {
    const Vec k0 = fx.solutions.k_set->project(Vec::Zero(d));
    report.checks.push_back(residual_check(
        "shadow-is-projected-anchor", "the shadow limit is P_Z(anchor - k0)",
        (trace.last_shadow() - fx.solutions.z_set->project(anchor - k0)).norm(),
        limit_tol));
  }
  if ((options.algorithm == Algorithm::dr || options.algorithm == Algorithm::averaged) &&
      trace.converged) {
    const Vec& p = trace.last();
    double fejer = 0.0;
    for (std::size_t n = 0; n + 1 < trace.iterates.size(); ++n) {
      fejer = std::max(fejer, (trace.iterates[n + 1] - p).norm() -
                                  (trace.iterates[n] - p).norm());
    }
    report.checks.push_back(residual_check(
        "fejer-monotonicity", "distances to the limit never increase", fejer,
        1e-10));
  }

  report.traces.push_back(summarize_trace(trace));
  report.finalize();
  return {std::move(report), std::move(trace)};
}

}  // namespace atd
