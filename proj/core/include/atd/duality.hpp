#pragma once

#include <utility>
#include <vector>

#include "atd/operator.hpp"
#include "atd/prox.hpp"

namespace atd {

/*
 * An ordered pair (A, B) of maximally monotone operators together with its
 * dual pair (A^{-1}, B^{-v}).  The primal problem is 0 in (A+B)z, with
 * solution set Z; the dual problem is the primal problem of the dual pair,
 * with solution set K.  Duality here is an involution: the dual of the
 * dual pair agrees pointwise with the original.
 */
class DualPair {
 public:
  DualPair(ResolventOperator a, ResolventOperator b);

  Eigen::Index dim() const { return a_.dim(); }
  const ResolventOperator& a() const { return a_; }
  const ResolventOperator& b() const { return b_; }
  const ResolventOperator& dual_a() const { return dual_a_; }  // A^{-1}
  const ResolventOperator& dual_b() const { return dual_b_; }  // B^{-v}

  /// The dual pair as a DualPair in its own right.
  DualPair dual() const { return DualPair(dual_a_, dual_b_); }

  bool paramonotone() const { return a_.paramonotone() && b_.paramonotone(); }

 private:
  ResolventOperator a_, b_, dual_a_, dual_b_;
};

/// Three-valued membership verdict: "undecidable" records that no witness
/// was available, which is different from a refuted membership.
enum class Ternary { no, yes, undecidable };

/// k in K_z = (Az) ∩ (-Bz): the dual solutions compatible with primal z.
bool kz_contains(const DualPair& p, const Vec& z, const Vec& k,
                 double tol = kMembershipTol);

/// z in Z_k = (A^{-1}k) ∩ (-B^{-v}k), evaluated through the dual pair's
/// own graphs; equivalent to kz_contains(p, z, k) but computed on the
/// other side of the duality.
bool zk_contains(const DualPair& p, const Vec& k, const Vec& z,
                 double tol = kMembershipTol);

/// z in Z given a candidate dual witness.
bool z_contains(const DualPair& p, const Vec& z, const Vec& k_witness,
                double tol = kMembershipTol);

/// Witness-free variant: tries k = 0 (the common-zero certificate); a
/// failure is only "undecidable" because Z membership needs some witness.
Ternary z_contains(const DualPair& p, const Vec& z, double tol = kMembershipTol);

/// k in K given a candidate primal witness, and the witness-free variant.
bool k_contains(const DualPair& p, const Vec& k, const Vec& z_witness,
                double tol = kMembershipTol);
Ternary k_contains(const DualPair& p, const Vec& k, double tol = kMembershipTol);

/// The Douglas-Rachford operator of the pair: T = J_B R_A + Id - J_A.
Vec douglas_rachford_apply(const DualPair& p, const Vec& x);

/*
 * The bijection between solution pairs and Douglas-Rachford fixed points:
 * psi maps (z, k) with k in K_z to the fixed point z + k, and psi_inverse
 * recovers (J_A x, x - J_A x) from a fixed point x.
 */
Vec psi(const DualPair& p, const Vec& z, const Vec& k, double tol = kMembershipTol);
std::pair<Vec, Vec> psi_inverse(const DualPair& p, const Vec& x,
                                double tol = kMembershipTol);

/// <k1 - k2, z1 - z2> for two solution pairs; zero in exact arithmetic.
/// Throws if either pair fails membership.
double passty_orthogonality(const DualPair& p, const Vec& z1, const Vec& k1,
                            const Vec& z2, const Vec& k2,
                            double tol = kMembershipTol);

/// Grid-witnessed test for w in (A box B)(x) = U_y ( Ay ∩ B(x-y) ).
/// One-sided: true is a certificate, false only means "not witnessed on
/// this grid".
bool parallel_sum_contains(const ResolventOperator& a, const ResolventOperator& b,
                           const Vec& x, const Vec& w, const std::vector<Vec>& grid,
                           double tol = kMembershipTol);

struct TotalDualityReport {
  double primal_value;  // inf (f + g), from the grid oracle
  double dual_value;    // inf (f* + g*(-.)), from the grid oracle
  double gap;           // |primal_value + dual_value|
  Vec primal_point;
  Vec dual_point;
};

/*
 * Desk-scale verification of total duality for subdifferential pairs:
 * minimizes f+g and f*+g*(-.) over a dense grid (dimension <= 2) and
 * reports the values, their gap and the minimizing grid points.  Requires
 * registered conjugates; spacing defaults to the declared grid pitch.
 */
TotalDualityReport total_duality_check(const ProxFunction& f, const ProxFunction& g,
                                       const Vec& box_lo, const Vec& box_hi,
                                       double spacing = 1e-3);

/// For a paramonotone pair, Z_k is all of Z for every dual solution k, so
/// one dual witness classifies arbitrary probe points: returns the probes
/// that lie in Z.  Throws unless both paramonotone flags are set.
std::vector<Vec> recover_z_from_dual(const DualPair& p, const Vec& k0,
                                     const std::vector<Vec>& probes,
                                     double tol = kMembershipTol);

}  // namespace atd
