#pragma once

#include <optional>

#include "atd/fixtures.hpp"
#include "atd/report.hpp"

namespace atd {

/// Throws UsageError when the suite's hypotheses do not hold on the fixture
/// (e.g. the paramonotone suite on a pair without both flags).
void require_suite_applicable(const Fixture& fx, Suite suite);

/*
 * Runs one verification suite against a fixture: a deterministic batch of
 * residual and verdict checks derived from the identities the fixture is
 * expected to satisfy, plus the fixture's own pinned expectations for that
 * suite.  The same (samples, seed) always produces the same report, up to
 * the timestamp.
 */
Report run_suite(const Fixture& fx, Suite suite, int samples, std::uint64_t seed);

struct AlgorithmOptions {
  Algorithm algorithm = Algorithm::dr;
  std::optional<Vec> x0;
  std::optional<Vec> anchor;       // Halpern / Haugazeau target y
  std::optional<double> lambda;    // relaxation for the averaged family
  double tol = 1e-8;
  int max_iter = 100000;
};

struct AlgorithmResult {
  Report report;
  IterationTrace trace;
};

/// Runs one splitting algorithm on a fixture and reports convergence, the
/// shadow limit, and its distance to the primal solution set when the
/// fixture carries ground truth.
AlgorithmResult run_algorithm(const Fixture& fx, const AlgorithmOptions& options);

}  // namespace atd
