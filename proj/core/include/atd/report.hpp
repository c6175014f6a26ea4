#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atd/splitting.hpp"

namespace atd {

/// Errors that should surface as CLI usage problems (exit code 2) rather
/// than failed checks (exit code 1).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string name;
  std::string property;  // the identity or fact the check exercises
  std::string expected;
  std::string actual;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Residual-style check: passes iff residual <= tolerance.
Check residual_check(std::string name, std::string property, double residual,
                     double tolerance);

/// Boolean-style check (expected/actual verdicts).
Check verdict_check(std::string name, std::string property, bool expected,
                    bool actual);

struct TraceSummary {
  std::string algorithm;
  bool converged = false;
  int iterations_used = 0;
  std::vector<double> final_iterate;
  std::vector<double> final_shadow;
  double final_residual = 0.0;
};

TraceSummary summarize_trace(const IterationTrace& trace);

struct Report {
  int schema_version = 1;
  std::string fixture;
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string timestamp;  // ISO-8601 UTC; the only non-deterministic field
  std::vector<Check> checks;
  std::vector<TraceSummary> traces;

  bool all_pass() const;
  /// Sorts checks by name so reports are a deterministic reduction.
  void finalize();
};

std::string current_timestamp_utc();

std::string report_to_json(const Report& report, int indent = 2);

/// CSV rows n,x_0..x_{d-1},shadow_0..shadow_{d-1},residual with floats at
/// 17 significant digits (lossless round trip), period decimal separator.
std::string trace_to_csv(const IterationTrace& trace);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace atd
