#pragma once

#include <cstdint>
#include <utility>

#include "atd/duality.hpp"
#include "atd/sets.hpp"

namespace atd {

/// Which orthogonality statement a pair of sets is asked to satisfy.
enum class OrthoKind {
  set_vs_set,    // <u, v> = 0
  diff_vs_diff,  // <u1 - u2, v1 - v2> = 0
  diff_vs_set,   // <u1 - u2, v> = 0
};

/// Sampling policy for the orthogonality guard.  Sampling is a guard, not
/// a proof; fixtures with declared structure can skip it.
struct OrthoCheck {
  int samples = 50;
  double tol = 1e-9;
  double half_width = 10.0;
  std::uint64_t seed = 0x0fff5eedULL;
  bool skip = false;
};

/// Largest |inner product| defect observed over sampled members of the two
/// sets (members are projections of random cube points).
double orthogonality_defect(const ConvexSet& u, const ConvexSet& v, OrthoKind kind,
                            const OrthoCheck& check = {});

/// A pair of mutually orthogonal sets whose sum projects coordinatewise.
struct OrthogonalSum {
  ConvexSet u, v;
  bool validated_orthogonal = false;
};

OrthogonalSum make_orthogonal_sum(ConvexSet u, ConvexSet v,
                                  const OrthoCheck& check = {});

/// P_{U+V} x = P_U x + P_V x for U ⊥ V.  Throws if the sampled
/// orthogonality guard fails.
Vec project_orthogonal_sum(const ConvexSet& u, const ConvexSet& v, const Vec& x,
                           const OrthoCheck& check = {});

/// P_{y+S}(x) = y + P_S(x - y).
Vec project_translate(const ConvexSet& s, const Vec& y, const Vec& x);

/*
 * Projection onto Z + K from one known solution pair:
 *   P_{Z+K}(x) = P_Z(x - k0) + P_K(x - z0).
 * Valid for paramonotone pairs, where (Z - Z) ⊥ (K - K) makes the sum
 * split after recentering at (z0, k0).  Membership of z0 and k0 is
 * checked against the set descriptions.
 */
Vec project_z_plus_k(const ConvexSet& z_set, const ConvexSet& k_set, const Vec& z0,
                     const Vec& k0, const Vec& x, double tol = kMembershipTol);

/// Simplification when (Z - Z) ⊥ K: P_{Z+K}(x) = P_Z(x) + P_K(x - z0).
Vec project_z_plus_k_zero_in_k(const ConvexSet& z_set, const ConvexSet& k_set,
                               const Vec& z0, const Vec& x,
                               const OrthoCheck& check = {},
                               double tol = kMembershipTol);

/// Simplification when Z ⊥ (K - K): P_{Z+K}(x) = P_Z(x - k0) + P_K(x).
Vec project_z_plus_k_zero_in_z(const ConvexSet& z_set, const ConvexSet& k_set,
                               const Vec& k0, const Vec& x,
                               const OrthoCheck& check = {},
                               double tol = kMembershipTol);

/*
 * The shadow of the best approximation: J_A P_{Z+K}(x), which collapses to
 * P_Z(x - k0) for any dual solution k0 (and to P_Z(x) when 0 in K).  The
 * two routes are compared internally and a disagreement beyond tol throws,
 * since it falsifies the formula the caller relies on.
 */
Vec shadow_projection(const DualPair& pair, const ConvexSet& z_set,
                      const ConvexSet& k_set, const Vec& k0, const Vec& x,
                      double tol = 1e-9);

/// For a feasibility pair (A, B) = (N_U, N_V): returns
/// (P_U(P_FixT(x)), P_{U∩V}(x)); the two agree when Fix T is the fixture's
/// fixed-point set.  Requires U and V to carry box structure.
std::pair<Vec, Vec> summerland_check(const ConvexSet& u, const ConvexSet& v,
                                     const ConvexSet& fix_t, const Vec& x);

}  // namespace atd
