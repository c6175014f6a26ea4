#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "atd/duality.hpp"
#include "atd/operator.hpp"

namespace atd {

enum class Algorithm { dr, averaged, halpern, haugazeau };

/*
 * The relaxed Peaceman-Rachford family (1 - lambda) Id + lambda R_B R_A.
 * lambda = 1/2 is the Douglas-Rachford operator T = J_B R_A + Id - J_A,
 * firmly nonexpansive; lambda = 1 is the Peaceman-Rachford operator,
 * merely nonexpansive.  Both are self-dual: swapping the pair for its
 * Attouch-Thera dual leaves the map pointwise unchanged.
 */
class SplittingOperator {
 public:
  SplittingOperator(DualPair pair, double relaxation);

  const DualPair& pair() const { return pair_; }
  double relaxation() const { return relaxation_; }
  Eigen::Index dim() const { return pair_.dim(); }

  /// T x.  For lambda = 1/2 the resolvent form J_B R_A + Id - J_A is used;
  /// otherwise the averaged reflection form.
  Vec apply(const Vec& x) const;

  /// (1 - lambda) x + lambda R_B(R_A x), the reflection form at any lambda.
  Vec apply_reflection_form(const Vec& x) const;

 private:
  DualPair pair_;
  double relaxation_;
};

SplittingOperator dr_operator(DualPair pair);                       // lambda = 1/2
SplittingOperator pr_operator(DualPair pair);                       // lambda = 1
SplittingOperator averaged_operator(DualPair pair, double lambda);  // lambda in [0,1]

/// ||J_B(J_A x) - J_{B^{-v}}(J_{A^{-1}} x)||: the backward-backward
/// composition is not self-dual, and this returns the witness gap at x.
double backward_backward_dual_gap(const DualPair& p, const Vec& x);

double fixed_point_residual(const SplittingOperator& op, const Vec& x);

/*
 * Per-iteration record of an iteration run: governing iterates x_n, shadow
 * iterates J_A x_n, and fixed-point residuals ||T x_n - x_n||.  The shadow
 * sequence is the one that approaches the primal solutions.
 */
struct IterationTrace {
  std::vector<Vec> iterates;
  std::vector<Vec> shadows;
  std::vector<double> residuals;
  Algorithm algorithm = Algorithm::dr;
  std::optional<Vec> anchor;
  bool converged = false;
  int iterations_used = 0;

  const Vec& last() const { return iterates.back(); }
  const Vec& last_shadow() const { return shadows.back(); }
};

/// Fixed-point iteration x_{n+1} = T x_n; stops when the displacement
/// drops below tol.  Exhausting max_iter is reported, not thrown.
IterationTrace iterate_dr(const SplittingOperator& op, const Vec& x0, double tol = 1e-8,
                          int max_iter = 100000);

/// Anchored iteration x_{n+1} = (1 - lambda_n) T x_n + lambda_n y, which
/// converges to the fixed point nearest the anchor y.  The default
/// schedule is lambda_n = 1/(n+2).  Stops once both the displacement and
/// the anchor pull lambda_n ||T x_n - y|| are below tol.
IterationTrace iterate_halpern(const SplittingOperator& op, const Vec& x0, const Vec& y,
                               const std::function<double(int)>& schedule = {},
                               double tol = 1e-8, int max_iter = 100000);

/// Projection-corrected iteration x_{n+1} = Q(y, x_n, T x_n) converging in
/// norm to the fixed point nearest y; starts at x_0 = y.
IterationTrace iterate_haugazeau(const SplittingOperator& op, const Vec& y,
                                 double tol = 1e-8, int max_iter = 100000);

/// Q(x, a, b): the projection of x onto H(x,a) ∩ H(a,b), where H(u,v) is
/// the halfspace of points no farther from v than u.  Closed form; throws
/// on the infeasible degenerate case (rho = 0 with pi < 0).
Vec haugazeau_q(const Vec& x, const Vec& a, const Vec& b);

}  // namespace atd
