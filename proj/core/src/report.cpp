#include "atd/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace atd {

namespace {

// Locale-independent float formatting, 17 significant digits.
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

}  // namespace

Check residual_check(std::string name, std::string property, double residual,
                     double tolerance) {
  Check c;
  c.name = std::move(name);
  c.property = std::move(property);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  c.expected = "residual <= " + format_double(tolerance);
  c.actual = format_double(residual);
  return c;
}

Check verdict_check(std::string name, std::string property, bool expected,
                    bool actual) {
  Check c;
  c.name = std::move(name);
  c.property = std::move(property);
  c.expected = expected ? "true" : "false";
  c.actual = actual ? "true" : "false";
  c.residual = (expected == actual) ? 0.0 : 1.0;
  c.tolerance = 0.0;
  c.pass = expected == actual;
  return c;
}

TraceSummary summarize_trace(const IterationTrace& trace) {
  TraceSummary s;
  switch (trace.algorithm) {
    case Algorithm::dr: s.algorithm = "dr"; break;
    case Algorithm::averaged: s.algorithm = "pr_averaged"; break;
    case Algorithm::halpern: s.algorithm = "halpern"; break;
    case Algorithm::haugazeau: s.algorithm = "haugazeau"; break;
  }
  s.converged = trace.converged;
  s.iterations_used = trace.iterations_used;
  const Vec& x = trace.last();
  const Vec& sh = trace.last_shadow();
  s.final_iterate.assign(x.data(), x.data() + x.size());
  s.final_shadow.assign(sh.data(), sh.data() + sh.size());
  s.final_residual = trace.residuals.back();
  return s;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

void Report::finalize() {
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::string current_timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string report_to_json(const Report& report, int indent) {
  nlohmann::json j;
  j["schema_version"] = report.schema_version;
  j["fixture"] = report.fixture;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["timestamp"] = report.timestamp;
  j["checks"] = nlohmann::json::array();
  for (const Check& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"property", c.property},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  j["traces"] = nlohmann::json::array();
  for (const TraceSummary& t : report.traces) {
    j["traces"].push_back({{"algorithm", t.algorithm},
                           {"converged", t.converged},
                           {"iterations_used", t.iterations_used},
                           {"final_iterate", t.final_iterate},
                           {"final_shadow", t.final_shadow},
                           {"final_residual", t.final_residual}});
  }
  return j.dump(indent);
}

std::string trace_to_csv(const IterationTrace& trace) {
  const Eigen::Index d = trace.iterates.empty() ? 0 : trace.iterates.front().size();
  std::string out = "n";
  for (Eigen::Index i = 0; i < d; ++i) out += ",x_" + std::to_string(i);
  for (Eigen::Index i = 0; i < d; ++i) out += ",shadow_" + std::to_string(i);
  out += ",residual\n";
  for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
    out += std::to_string(n);
    for (Eigen::Index i = 0; i < d; ++i) {
      out += ",";
      out += format_double(trace.iterates[n][i]);
    }
    for (Eigen::Index i = 0; i < d; ++i) {
      out += ",";
      out += format_double(trace.shadows[n][i]);
    }
    out += ",";
    out += format_double(trace.residuals[n]);
    out += "\n";
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace atd
