#include "atd/prox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace atd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Pwl1D::Pwl1D(double dom_lo, double dom_hi, std::vector<double> breakpoints,
             std::vector<double> slopes, double anchor, double anchor_value)
    : dom_lo_(dom_lo),
      dom_hi_(dom_hi),
      breaks_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      anchor_(anchor),
      anchor_value_(anchor_value) {
  if (!(dom_lo_ <= dom_hi_)) throw std::invalid_argument("Pwl1D: empty domain");
  if (slopes_.size() != breaks_.size() + 1) {
    throw std::invalid_argument("Pwl1D: need one slope per piece (breaks + 1)");
  }
  for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
    if (!(breaks_[i] < breaks_[i + 1])) {
      throw std::invalid_argument("Pwl1D: breakpoints must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i + 1 < slopes_.size(); ++i) {
    if (!(slopes_[i] < slopes_[i + 1])) {
      throw std::invalid_argument("Pwl1D: slopes must be strictly increasing (convexity)");
    }
  }
  for (double b : breaks_) {
    if (!(b > dom_lo_ && b < dom_hi_)) {
      throw std::invalid_argument("Pwl1D: breakpoints must lie inside the domain");
    }
  }
  if (!(anchor_ >= dom_lo_ && anchor_ <= dom_hi_)) {
    throw std::invalid_argument("Pwl1D: anchor must lie in the domain");
  }
  if (!std::isfinite(anchor_value_)) {
    throw std::invalid_argument("Pwl1D: anchor value must be finite");
  }
}

double Pwl1D::value(double x) const {
  if (!std::isfinite(x) || x < dom_lo_ || x > dom_hi_) return kInf;
  // Integrate the slope profile from the anchor to x.
  double v = anchor_value_;
  double lo = std::min(anchor_, x), hi = std::max(anchor_, x);
  const double sign = (x >= anchor_) ? 1.0 : -1.0;
  double pos = lo;
  for (std::size_t i = 0; i <= breaks_.size(); ++i) {
    const double piece_hi = (i < breaks_.size()) ? breaks_[i] : kInf;
    if (pos >= hi) break;
    if (piece_hi <= pos) continue;
    const double seg = std::min(hi, piece_hi) - pos;
    v += sign * slopes_[i] * seg;
    pos += seg;
  }
  return v;
}

double Pwl1D::prox(double x, double alpha) const {
  if (!(alpha > 0.0)) throw std::invalid_argument("Pwl1D::prox: alpha must be positive");
  if (dom_lo_ == dom_hi_) return dom_lo_;

  // z + alpha * \partial f(z) sweeps R monotonically; find the piece or
  // knot whose image interval brackets x.
  struct Knot {
    double pos, left_slope, right_slope;
  };
  std::vector<Knot> knots;
  if (std::isfinite(dom_lo_)) knots.push_back({dom_lo_, -kInf, slopes_.front()});
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    knots.push_back({breaks_[i], slopes_[i], slopes_[i + 1]});
  }
  if (std::isfinite(dom_hi_)) knots.push_back({dom_hi_, slopes_.back(), kInf});

  for (const Knot& k : knots) {
    const double img_lo = (k.left_slope == -kInf) ? -kInf : k.pos + alpha * k.left_slope;
    const double img_hi = (k.right_slope == kInf) ? kInf : k.pos + alpha * k.right_slope;
    if (x >= img_lo && x <= img_hi) return k.pos;
  }
  // Interior of a piece: z = x - alpha * s, valid on its own interval.
  for (std::size_t i = 0; i <= breaks_.size(); ++i) {
    const double piece_lo = (i == 0) ? dom_lo_ : breaks_[i - 1];
    const double piece_hi = (i == breaks_.size()) ? dom_hi_ : breaks_[i];
    const double z = x - alpha * slopes_[i];
    if (z > piece_lo && z < piece_hi) return z;
  }
  throw std::logic_error("Pwl1D::prox: case analysis fell through");
}

Pwl1D Pwl1D::conjugate() const {
  if (dom_lo_ == dom_hi_) {
    // f = ind_{c} + f(c); the conjugate is the affine map y -> c*y - f(c).
    return Pwl1D(-kInf, kInf, {}, {dom_lo_}, 0.0, -anchor_value_);
  }
  // The subdifferential graph is a monotone staircase; conjugation swaps
  // its axes.  Slopes of f* are the x-knots of f (finite domain endpoints
  // included), breakpoints of f* are the slope levels where f* s slope
  // jumps, and dom f* is bounded on the side where f had an unbounded
  // piece.
  const double conj_lo = std::isfinite(dom_lo_) ? -kInf : slopes_.front();
  const double conj_hi = std::isfinite(dom_hi_) ? kInf : slopes_.back();

  std::vector<double> cslopes;
  std::vector<double> cbreaks;
  if (std::isfinite(dom_lo_)) cslopes.push_back(dom_lo_);
  for (std::size_t i = 0; i < breaks_.size(); ++i) cslopes.push_back(breaks_[i]);
  if (std::isfinite(dom_hi_)) cslopes.push_back(dom_hi_);
  // Slope level s_i separates consecutive pieces of f*; keep the ones
  // strictly inside the conjugate domain.
  std::size_t first = std::isfinite(dom_lo_) ? 0 : 1;
  std::size_t last = std::isfinite(dom_hi_) ? slopes_.size() : slopes_.size() - 1;
  for (std::size_t i = first; i < last; ++i) cbreaks.push_back(slopes_[i]);

  if (cslopes.empty()) {
    // f affine on all of R: conjugate is the indicator of its slope.
    const double s = slopes_.front();
    return Pwl1D(s, s, {}, {0.0}, s, s * anchor_ - anchor_value_);
  }
  if (cslopes.size() == 1) cbreaks.clear();

  double canchor;
  if (std::isfinite(conj_lo) && std::isfinite(conj_hi)) {
    canchor = 0.5 * (conj_lo + conj_hi);
  } else if (std::isfinite(conj_lo)) {
    canchor = conj_lo;
  } else if (std::isfinite(conj_hi)) {
    canchor = conj_hi;
  } else {
    canchor = cbreaks.empty() ? 0.0 : cbreaks.front();
  }

  // f*(y) = sup_x x*y - f(x); for y in dom f* the sup is attained at an
  // x-knot (or along a slope-matching piece, whose endpoints tie).
  auto conj_value = [this](double y) {
    double best = y * anchor_ - value(anchor_);
    auto consider = [&](double x) {
      if (!std::isfinite(x)) return;
      const double v = y * x - value(x);
      if (v > best) best = v;
    };
    consider(dom_lo_);
    consider(dom_hi_);
    for (double b : breaks_) consider(b);
    return best;
  };

  return Pwl1D(conj_lo, conj_hi, std::move(cbreaks), std::move(cslopes), canchor,
               conj_value(canchor));
}

Pwl1D hinge_pwl(double knee) { return Pwl1D(-kInf, kInf, {knee}, {0.0, 1.0}, knee, 0.0); }

Pwl1D interval_indicator_pwl(double lo, double hi) {
  return Pwl1D(lo, hi, {}, {0.0}, lo, 0.0);
}

ProxFunction::ProxFunction(Eigen::Index dim, ProxMap prox, ValueMap value,
                           std::string label)
    : dim_(dim), prox_(std::move(prox)), value_(std::move(value)), label_(std::move(label)) {
  if (dim_ <= 0) throw std::invalid_argument("ProxFunction: dim must be positive");
  if (!prox_ || !value_) throw std::invalid_argument("ProxFunction: empty maps");
}

Vec ProxFunction::prox(const Vec& x, double alpha) const {
  if (x.size() != dim_) throw std::invalid_argument("ProxFunction::prox: dimension mismatch");
  if (!(alpha > 0.0)) throw std::invalid_argument("ProxFunction::prox: alpha must be positive");
  return prox_(alpha, x);
}

double ProxFunction::value(const Vec& x) const {
  if (x.size() != dim_) throw std::invalid_argument("ProxFunction::value: dimension mismatch");
  return value_(x);
}

const ProxFunction& ProxFunction::conjugate() const {
  if (!conjugate_) {
    throw std::logic_error("ProxFunction: no conjugate registered for '" + label_ + "'");
  }
  return *conjugate_;
}

void ProxFunction::set_conjugate(ProxFunction f) {
  conjugate_ = std::make_shared<ProxFunction>(std::move(f));
}

ProxFunction quadratic_energy(Eigen::Index dim) {
  ProxFunction f(dim,
                 [](double alpha, const Vec& x) -> Vec { return x / (1.0 + alpha); },
                 [](const Vec& x) { return 0.5 * x.squaredNorm(); },
                 "0.5*||x||^2");
  ProxFunction star(dim,
                    [](double alpha, const Vec& x) -> Vec { return x / (1.0 + alpha); },
                    [](const Vec& x) { return 0.5 * x.squaredNorm(); },
                    "0.5*||x||^2");
  f.set_conjugate(std::move(star));
  return f;
}

ProxFunction linear_function(Vec u) {
  const Eigen::Index dim = u.size();
  ProxFunction f(dim,
                 [u](double alpha, const Vec& x) -> Vec { return x - alpha * u; },
                 [u](const Vec& x) { return u.dot(x); }, "<u,.>");
  ConvexSet point = singleton_set(u);
  f.set_conjugate(ProxFunction(
      dim, [point](double, const Vec& x) -> Vec { return point.project(x); },
      [point](const Vec& x) { return point.contains(x, 1e-12) ? 0.0 : kInf; },
      "ind{u}"));
  return f;
}

ProxFunction indicator_function(const ConvexSet& s) {
  ProxFunction f(s.dim(),
                 [s](double, const Vec& x) -> Vec { return s.project(x); },
                 [s](const Vec& x) {
                   return s.contains(x, 1e-12 * (1.0 + x.norm())) ? 0.0 : kInf;
                 },
                 "ind[" + s.label() + "]");
  if (s.box()) {
    std::vector<Pwl1D> parts;
    parts.reserve(static_cast<std::size_t>(s.dim()));
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
      parts.push_back(Pwl1D(s.box()->lo[i], s.box()->hi[i], {}, {0.0},
                            std::isfinite(s.box()->lo[i]) ? s.box()->lo[i]
                            : std::isfinite(s.box()->hi[i]) ? s.box()->hi[i]
                                                            : 0.0,
                            0.0));
    }
    std::vector<Pwl1D> conj_parts;
    conj_parts.reserve(parts.size());
    for (const Pwl1D& p : parts) conj_parts.push_back(p.conjugate());
    f.set_conjugate(separable_pwl(std::move(conj_parts), "support[" + s.label() + "]"));
  }
  return f;
}

ProxFunction separable_pwl(std::vector<Pwl1D> parts, std::string label) {
  if (parts.empty()) throw std::invalid_argument("separable_pwl: no parts");
  const Eigen::Index dim = static_cast<Eigen::Index>(parts.size());
  if (label.empty()) label = "pwl";
  ProxFunction f(dim,
                 [parts](double alpha, const Vec& x) -> Vec {
                   Vec z(x.size());
                   for (Eigen::Index i = 0; i < x.size(); ++i) {
                     z[i] = parts[static_cast<std::size_t>(i)].prox(x[i], alpha);
                   }
                   return z;
                 },
                 [parts](const Vec& x) {
                   double v = 0.0;
                   for (Eigen::Index i = 0; i < x.size(); ++i) {
                     v += parts[static_cast<std::size_t>(i)].value(x[i]);
                   }
                   return v;
                 },
                 label);
  std::vector<Pwl1D> conj_parts;
  conj_parts.reserve(parts.size());
  for (const Pwl1D& p : parts) conj_parts.push_back(p.conjugate());
  const Eigen::Index cdim = dim;
  auto cvalue = [conj_parts](const Vec& x) {
    double v = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      v += conj_parts[static_cast<std::size_t>(i)].value(x[i]);
    }
    return v;
  };
  auto cprox = [conj_parts](double alpha, const Vec& x) -> Vec {
    Vec z(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      z[i] = conj_parts[static_cast<std::size_t>(i)].prox(x[i], alpha);
    }
    return z;
  };
  f.set_conjugate(ProxFunction(cdim, cprox, cvalue, label + "*"));
  return f;
}

}  // namespace atd
