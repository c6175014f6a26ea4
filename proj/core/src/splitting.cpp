#include "atd/splitting.hpp"

#include <cmath>
#include <stdexcept>

namespace atd {

SplittingOperator::SplittingOperator(DualPair pair, double relaxation)
    : pair_(std::move(pair)), relaxation_(relaxation) {
  if (!(relaxation_ >= 0.0 && relaxation_ <= 1.0)) {
    throw std::invalid_argument("SplittingOperator: relaxation must lie in [0, 1]");
  }
}

Vec SplittingOperator::apply(const Vec& x) const {
  if (relaxation_ == 0.5) return douglas_rachford_apply(pair_, x);
  return apply_reflection_form(x);
}

Vec SplittingOperator::apply_reflection_form(const Vec& x) const {
  const Vec rr = pair_.b().reflected_resolvent(pair_.a().reflected_resolvent(x));
  return (1.0 - relaxation_) * x + relaxation_ * rr;
}

SplittingOperator dr_operator(DualPair pair) {
  return SplittingOperator(std::move(pair), 0.5);
}

SplittingOperator pr_operator(DualPair pair) {
  return SplittingOperator(std::move(pair), 1.0);
}

SplittingOperator averaged_operator(DualPair pair, double lambda) {
  return SplittingOperator(std::move(pair), lambda);
}

double backward_backward_dual_gap(const DualPair& p, const Vec& x) {
  const Vec primal_side = p.b().resolvent(p.a().resolvent(x));
  const Vec dual_side = p.dual_b().resolvent(p.dual_a().resolvent(x));
  return (primal_side - dual_side).norm();
}

double fixed_point_residual(const SplittingOperator& op, const Vec& x) {
  return (op.apply(x) - x).norm();
}

namespace {

IterationTrace make_trace(Algorithm alg, const Vec& x0, const SplittingOperator& op) {
  IterationTrace trace;
  trace.algorithm = alg;
  trace.iterates.push_back(x0);
  trace.shadows.push_back(op.pair().a().resolvent(x0));
  trace.residuals.push_back(fixed_point_residual(op, x0));
  return trace;
}

void record(IterationTrace& trace, const SplittingOperator& op, const Vec& x) {
  trace.iterates.push_back(x);
  trace.shadows.push_back(op.pair().a().resolvent(x));
  trace.residuals.push_back(fixed_point_residual(op, x));
}

}  // namespace

IterationTrace iterate_dr(const SplittingOperator& op, const Vec& x0, double tol,
                          int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("iterate_dr: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("iterate_dr: max_iter must be >= 1");
  IterationTrace trace = make_trace(Algorithm::dr, x0, op);
  // For the fixed-point iteration the displacement IS the residual.
  if (trace.residuals.back() <= tol) {
    trace.converged = true;
    return trace;
  }
  Vec x = x0;
  for (int n = 0; n < max_iter; ++n) {
    const Vec next = op.apply(x);
    const double step = (next - x).norm();
    x = next;
    record(trace, op, x);
    ++trace.iterations_used;
    if (step <= tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

IterationTrace iterate_halpern(const SplittingOperator& op, const Vec& x0, const Vec& y,
                               const std::function<double(int)>& schedule, double tol,
                               int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("iterate_halpern: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("iterate_halpern: max_iter must be >= 1");
  auto lambda = schedule ? schedule
                         : [](int n) { return 1.0 / (static_cast<double>(n) + 2.0); };
  IterationTrace trace = make_trace(Algorithm::halpern, x0, op);
  trace.anchor = y;
  Vec x = x0;
  for (int n = 0; n < max_iter; ++n) {
    const double ln = lambda(n);
    if (!(ln > 0.0 && ln < 1.0)) {
      throw std::invalid_argument("iterate_halpern: schedule must stay in (0, 1)");
    }
    const Vec tx = op.apply(x);
    const Vec next = (1.0 - ln) * tx + ln * y;
    const double step = (next - x).norm();
    const double anchor_pull = ln * (tx - y).norm();
    x = next;
    record(trace, op, x);
    ++trace.iterations_used;
    // The anchor term keeps pulling even when consecutive iterates nearly
    // coincide, so both contributions must be small before stopping.
    if (step <= tol && anchor_pull <= tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

Vec haugazeau_q(const Vec& x, const Vec& a, const Vec& b) {
  const Vec xa = x - a;
  const Vec ab = a - b;
  const double pi = xa.dot(ab);
  const double mu = xa.squaredNorm();
  const double nu = ab.squaredNorm();
  const double rho = mu * nu - pi * pi;
  if (rho == 0.0 && pi >= 0.0) return b;
  if (rho > 0.0 && pi * nu >= rho) return x + (1.0 + pi / nu) * (b - a);
  if (rho > 0.0) return a + (nu / rho) * (pi * xa + mu * (b - a));
  throw std::runtime_error(
      "haugazeau_q: H(x,a) ∩ H(a,b) is empty (inconsistent halfspaces)");
}

IterationTrace iterate_haugazeau(const SplittingOperator& op, const Vec& y, double tol,
                                 int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("iterate_haugazeau: tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("iterate_haugazeau: max_iter must be >= 1");
  IterationTrace trace = make_trace(Algorithm::haugazeau, y, op);
  trace.anchor = y;
  if (trace.residuals.back() <= tol) {
    trace.converged = true;
    return trace;
  }
  Vec x = y;
  for (int n = 0; n < max_iter; ++n) {
    const Vec tx = op.apply(x);
    const Vec next = haugazeau_q(y, x, tx);
    const double step = (next - x).norm();
    x = next;
    record(trace, op, x);
    ++trace.iterations_used;
    if (step <= tol && trace.residuals.back() <= tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

}  // namespace atd
