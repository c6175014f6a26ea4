#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "atd/operator.hpp"
#include "atd/sets.hpp"

namespace atd {

/*
 * Closed convex piecewise-linear function of one variable:
 *
 *   domain [dom_lo, dom_hi] (either end may be infinite),
 *   breakpoints b_1 < ... < b_m strictly inside the domain,
 *   slopes s_0 < ... < s_m, one per piece,
 *   value pinned by f(anchor) = anchor_value.
 *
 * Both prox_{alpha f} and the Fenchel conjugate are exact case analyses,
 * which is what keeps the resolvent identity checks at 1e-12 honest.
 */
class Pwl1D {
 public:
  Pwl1D(double dom_lo, double dom_hi, std::vector<double> breakpoints,
        std::vector<double> slopes, double anchor, double anchor_value);

  double dom_lo() const { return dom_lo_; }
  double dom_hi() const { return dom_hi_; }
  const std::vector<double>& breakpoints() const { return breaks_; }
  const std::vector<double>& slopes() const { return slopes_; }

  /// f(x); +inf outside the domain.
  double value(double x) const;

  /// argmin_z 1/2 (z - x)^2 + alpha * f(z).
  double prox(double x, double alpha = 1.0) const;

  /// Exact Fenchel conjugate (again piecewise linear).
  Pwl1D conjugate() const;

 private:
  double dom_lo_, dom_hi_;
  std::vector<double> breaks_;
  std::vector<double> slopes_;
  double anchor_, anchor_value_;
};

/// f(x) = max(0, x - knee): zero up to the knee, unit slope after.
Pwl1D hinge_pwl(double knee);

/// Indicator of [lo, hi].
Pwl1D interval_indicator_pwl(double lo, double hi);

/*
 * A function f in Gamma represented by its prox map prox_{alpha f} and its
 * (extended-real) value map.  prox_f is the resolvent of the maximally
 * monotone operator \partial f.  When the Fenchel conjugate has a closed
 * form it is registered one level deep, which is all Moreau decomposition
 * and the duality-gap oracles ever dereference.
 */
class ProxFunction {
 public:
  using ProxMap = std::function<Vec(double, const Vec&)>;  // (alpha, x)
  using ValueMap = std::function<double(const Vec&)>;

  ProxFunction(Eigen::Index dim, ProxMap prox, ValueMap value, std::string label);

  Eigen::Index dim() const { return dim_; }
  const std::string& label() const { return label_; }

  Vec prox(const Vec& x, double alpha = 1.0) const;
  double value(const Vec& x) const;

  bool has_conjugate() const { return conjugate_ != nullptr; }
  const ProxFunction& conjugate() const;
  void set_conjugate(ProxFunction f);

 private:
  Eigen::Index dim_;
  ProxMap prox_;
  ValueMap value_;
  std::string label_;
  std::shared_ptr<ProxFunction> conjugate_;
};

/// 1/2 ||x||^2 (self-conjugate).
ProxFunction quadratic_energy(Eigen::Index dim);

/// <u, .>; conjugate is the indicator of {u}.
ProxFunction linear_function(Vec u);

/// Indicator of a set; the conjugate (support function) is registered when
/// the set carries finite box structure.
ProxFunction indicator_function(const ConvexSet& s);

/// Coordinate-separable sum of 1-D piecewise-linear functions, with the
/// conjugate assembled coordinatewise.
ProxFunction separable_pwl(std::vector<Pwl1D> parts, std::string label = "");

}  // namespace atd
