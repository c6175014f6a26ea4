#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace atd {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Default absolute tolerance for graph-membership tests.
inline constexpr double kMembershipTol = 1e-9;

bool is_finite(const Vec& v);

/*
 * A maximally monotone operator A on R^n, represented by its resolvent
 * J_A = (Id + A)^{-1}.  The resolvent is single-valued, everywhere defined
 * and firmly nonexpansive exactly when A is maximally monotone, so it is
 * the computable face of the set-valued object: reflections, duals,
 * graph membership and splitting steps are all resolvent expressions.
 *
 * The paramonotone flag is metadata.  Constructors that know the class of
 * the operator (subdifferentials, normal cones, classified linear maps)
 * set it; it is never inferred from black-box resolvent evaluations.
 */
class ResolventOperator {
 public:
  using Map = std::function<Vec(const Vec&)>;
  // (alpha, x) -> J_{alpha A} x, for operator classes with closed-form scaling.
  using ScaledMap = std::function<Vec(double, const Vec&)>;

  ResolventOperator(Eigen::Index dim, Map resolvent, bool paramonotone,
                    std::string label);

  Eigen::Index dim() const { return dim_; }
  bool paramonotone() const { return paramonotone_; }
  const std::string& label() const { return label_; }

  /// J_A x.
  Vec resolvent(const Vec& x) const;

  /// R_A x = 2 J_A x - x.
  Vec reflected_resolvent(const Vec& x) const;

  bool has_scaled_resolvent() const { return static_cast<bool>(scaled_); }
  void set_scaled_resolvent(ScaledMap m) { scaled_ = std::move(m); }

  /// J_{alpha A} x; throws if the operator class has no closed-form scaling.
  Vec scaled_resolvent(double alpha, const Vec& x) const;

 private:
  Eigen::Index dim_;
  Map map_;
  ScaledMap scaled_;
  bool paramonotone_;
  std::string label_;
};

// Transform algebra.  Each returns a new operator whose resolvent is an
// exact rewrite of the input's; the paramonotone flag survives all three.
ResolventOperator inverse(const ResolventOperator& a);           // J = Id - J_A
ResolventOperator ovee(const ResolventOperator& a);              // J = -J_A(-.)
ResolventOperator neg_ovee_inverse(const ResolventOperator& a);  // J = Id + J_A(-.)

/// u in Ax, decided through the Minty parametrization: u in Ax iff
/// J_A(x + u) = x, tested as ||J_A(x+u) - x|| <= tol.
bool graph_contains(const ResolventOperator& a, const Vec& x, const Vec& u,
                    double tol = kMembershipTol);

/// The graph point (J_A x, x - J_A x) carried by x; the components sum
/// back to x and always pass graph_contains.
std::pair<Vec, Vec> minty_param(const ResolventOperator& a, const Vec& x);

/// Linear paramonotonicity test: ker(M + M^T) contained in ker M.
/// Throws std::invalid_argument if M is not monotone (symmetric part must
/// be positive semidefinite within tol).
bool is_paramonotone_linear(const Mat& m, double tol = 1e-10);

/// Largest violation of ||Jx - Jy||^2 <= <x-y, Jx-Jy> over sampled pairs
/// drawn from [-half_width, half_width]^dim.  Nonpositive means the sample
/// is consistent with firm nonexpansiveness.
double firm_nonexpansiveness_defect(const ResolventOperator& a, int samples,
                                    std::uint64_t seed,
                                    double half_width = 10.0);

}  // namespace atd
