#pragma once

#include <functional>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "atd/operator.hpp"

namespace atd {

/*
 * A nonempty closed convex set represented by its exact projection map.
 * Everything downstream (normal cones, Z/K descriptions, Fix T sets)
 * consumes sets only through project(), so any map that is idempotent and
 * firmly nonexpansive qualifies.  Sets built from boxes keep their bounds
 * around so that exact intersections stay available.
 */
class ConvexSet {
 public:
  using Map = std::function<Vec(const Vec&)>;

  struct BoxData {
    Vec lo, hi;  // entries may be +/-inf
  };

  ConvexSet(Eigen::Index dim, Map projection, std::string label);

  Eigen::Index dim() const { return dim_; }
  const std::string& label() const { return label_; }

  Vec project(const Vec& x) const;

  /// ||P(x) - x||, zero exactly on members.
  double distance(const Vec& x) const;

  bool contains(const Vec& x, double tol = kMembershipTol) const;

  const std::optional<BoxData>& box() const { return box_; }
  void set_box(BoxData b) { box_ = std::move(b); }

 private:
  Eigen::Index dim_;
  Map map_;
  std::string label_;
  std::optional<BoxData> box_;
};

/// Axis-aligned box {x : lo <= x <= hi}; entries of lo/hi may be infinite.
/// Covers orthants, subspaces spanned by axes, intervals and singletons.
ConvexSet box_set(Vec lo, Vec hi, std::string label = "");

ConvexSet nonneg_orthant(Eigen::Index dim);

ConvexSet singleton_set(Vec point, std::string label = "");

/// Closed Euclidean ball.
ConvexSet ball_set(Vec center, double radius, std::string label = "");

/// Ray {t * direction : t >= 0} through the origin.
ConvexSet halfline_set(Vec direction, std::string label = "");

/// Halfspace {x : <normal, x> <= offset}.
ConvexSet halfspace_set(Vec normal, double offset, std::string label = "");

/// Exact intersection; requires both operands to carry box structure.
ConvexSet intersect_boxes(const ConvexSet& a, const ConvexSet& b);

}  // namespace atd
