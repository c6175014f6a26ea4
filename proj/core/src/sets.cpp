#include "atd/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace atd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ConvexSet::ConvexSet(Eigen::Index dim, Map projection, std::string label)
    : dim_(dim), map_(std::move(projection)), label_(std::move(label)) {
  if (dim_ <= 0) throw std::invalid_argument("ConvexSet: dim must be positive");
  if (!map_) throw std::invalid_argument("ConvexSet: empty projection map");
}

Vec ConvexSet::project(const Vec& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("ConvexSet::project: dimension mismatch on '" +
                                label_ + "'");
  }
  return map_(x);
}

double ConvexSet::distance(const Vec& x) const { return (project(x) - x).norm(); }

bool ConvexSet::contains(const Vec& x, double tol) const {
  return distance(x) <= tol;
}

ConvexSet box_set(Vec lo, Vec hi, std::string label) {
  if (lo.size() != hi.size()) throw std::invalid_argument("box_set: lo/hi size mismatch");
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (!(lo[i] <= hi[i])) throw std::invalid_argument("box_set: empty box (lo > hi)");
  }
  if (label.empty()) label = "box";
  ConvexSet s(lo.size(),
              [lo, hi](const Vec& x) -> Vec {
                return x.cwiseMax(lo).cwiseMin(hi);
              },
              std::move(label));
  s.set_box({std::move(lo), std::move(hi)});
  return s;
}

ConvexSet nonneg_orthant(Eigen::Index dim) {
  return box_set(Vec::Zero(dim), Vec::Constant(dim, kInf), "R^n_+");
}

ConvexSet singleton_set(Vec point, std::string label) {
  if (label.empty()) label = "singleton";
  return box_set(point, point, std::move(label));
}

ConvexSet ball_set(Vec center, double radius, std::string label) {
  if (!(radius >= 0.0)) throw std::invalid_argument("ball_set: radius must be >= 0");
  if (label.empty()) label = "ball";
  return ConvexSet(center.size(),
                   [center, radius](const Vec& x) -> Vec {
                     const Vec d = x - center;
                     const double n = d.norm();
                     if (n <= radius) return x;
                     return center + (radius / n) * d;
                   },
                   std::move(label));
}

ConvexSet halfline_set(Vec direction, std::string label) {
  const double nn = direction.squaredNorm();
  if (!(nn > 0.0)) throw std::invalid_argument("halfline_set: zero direction");
  if (label.empty()) label = "halfline";
  return ConvexSet(direction.size(),
                   [direction, nn](const Vec& x) -> Vec {
                     const double t = std::max(0.0, x.dot(direction) / nn);
                     return t * direction;
                   },
                   std::move(label));
}

ConvexSet halfspace_set(Vec normal, double offset, std::string label) {
  const double nn = normal.squaredNorm();
  if (!(nn > 0.0)) throw std::invalid_argument("halfspace_set: zero normal");
  if (label.empty()) label = "halfspace";
  return ConvexSet(normal.size(),
                   [normal, offset, nn](const Vec& x) -> Vec {
                     const double excess = x.dot(normal) - offset;
                     if (excess <= 0.0) return x;
                     return x - (excess / nn) * normal;
                   },
                   std::move(label));
}

ConvexSet intersect_boxes(const ConvexSet& a, const ConvexSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("intersect_boxes: dimension mismatch");
  if (!a.box() || !b.box()) {
    throw std::invalid_argument(
        "intersect_boxes: both sets must carry box structure");
  }
  Vec lo = a.box()->lo.cwiseMax(b.box()->lo);
  Vec hi = a.box()->hi.cwiseMin(b.box()->hi);
  return box_set(std::move(lo), std::move(hi), a.label() + " & " + b.label());
}

}  // namespace atd
