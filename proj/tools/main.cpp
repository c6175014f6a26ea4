// Command-line front end: fixture listing, verification suites and the
// splitting-algorithm runner, with JSON reports and CSV traces.
//
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atd/fixtures.hpp"
#include "atd/report.hpp"
#include "atd/suites.hpp"

namespace {

using atd::Vec;

Vec parse_vector(const std::string& text) {
  Vec v;
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      parts.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw atd::UsageError("cannot parse vector component '" + item + "'");
    }
  }
  if (parts.empty()) throw atd::UsageError("empty vector literal");
  v.resize(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v[static_cast<Eigen::Index>(i)] = parts[i];
  return v;
}

// Relative output paths land in ATDUAL_OUT_DIR when it is set.
std::string resolve_output_path(const std::string& path) {
  const char* dir = std::getenv("ATDUAL_OUT_DIR");
  if (!dir || *dir == '\0') return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / p).string();
}

void print_check_line(const atd::Check& c) {
  std::cout << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name << " (" << c.actual
            << "; wanted " << c.expected << ")\n";
}

int finish_report(const atd::Report& report, const std::string& json_path) {
  for (const atd::Check& c : report.checks) print_check_line(c);
  if (!json_path.empty()) {
    atd::write_text_file(resolve_output_path(json_path), atd::report_to_json(report));
  }
  std::cout << (report.all_pass() ? "all checks passed" : "CHECK FAILURES") << "\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attouch-Thera duality calculus: fixtures, verification suites "
               "and splitting-algorithm runs"};
  app.require_subcommand(1);

  std::string fixtures_file;
  app.add_option("--fixtures", fixtures_file,
                 "JSON overlay file with additional fixtures");

  auto* list_cmd = app.add_subcommand("list", "List fixtures and self-validate them");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string fixture_name, suite_name, verify_json;
  int samples = 200;
  std::uint64_t seed = 1;
  verify_cmd->add_option("--fixture", fixture_name, "fixture name")->required();
  verify_cmd->add_option("--suite", suite_name,
                         "identities|duality|paramonotone|projections|fenchel")
      ->required();
  verify_cmd->add_option("--samples", samples, "random samples per check");
  verify_cmd->add_option("--seed", seed, "RNG seed");
  verify_cmd->add_option("--json", verify_json, "write the report as JSON");

  auto* run_cmd = app.add_subcommand("run", "Run a splitting algorithm on a fixture");
  std::string run_fixture, algorithm_name, x0_text, anchor_text, csv_path, run_json;
  double tol = 1e-8;
  int max_iter = 100000;
  std::optional<double> lambda;
  run_cmd->add_option("--fixture", run_fixture, "fixture name")->required();
  run_cmd->add_option("--algorithm", algorithm_name, "dr|pr_averaged|halpern|haugazeau")
      ->required();
  run_cmd->add_option("--x0", x0_text, "start point, comma separated");
  run_cmd->add_option("--anchor", anchor_text, "anchor point y for halpern/haugazeau");
  run_cmd->add_option("--lambda", lambda, "relaxation for pr_averaged (default 1)");
  run_cmd->add_option("--tol", tol, "stopping tolerance");
  run_cmd->add_option("--max-iter", max_iter, "iteration budget");
  run_cmd->add_option("--csv", csv_path, "write the iteration trace as CSV");
  run_cmd->add_option("--json", run_json, "write the report as JSON");

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "Load and validate a fixture overlay file");
  std::string load_path;
  fixtures_cmd->add_option("--load", load_path, "fixture overlay JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<atd::Fixture> extra;
    if (!fixtures_file.empty()) extra = atd::load_fixture_file(fixtures_file);

    if (list_cmd->parsed()) {
      bool all_ok = true;
      auto describe = [&](const atd::Fixture& fx) {
        const auto checks = atd::validate_fixture(fx);
        bool ok = true;
        for (const auto& c : checks) ok = ok && c.pass;
        all_ok = all_ok && ok;
        std::cout << (ok ? "[ok]   " : "[BAD]  ") << fx.name << " (dim "
                  << fx.pair.dim() << ", "
                  << (fx.pair.paramonotone() ? "paramonotone" : "not paramonotone")
                  << ")\n       " << fx.description << "\n";
      };
      for (const atd::Fixture& fx : atd::fixture_registry()) describe(fx);
      for (const atd::Fixture& fx : extra) describe(fx);
      return all_ok ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      const atd::Fixture& fx = atd::find_fixture(fixture_name, extra);
      const atd::Suite suite = atd::suite_from_string(suite_name);
      const atd::Report report = atd::run_suite(fx, suite, samples, seed);
      std::cout << "suite '" << suite_name << "' on fixture '" << fixture_name
                << "' (samples " << samples << ", seed " << seed << ")\n";
      return finish_report(report, verify_json);
    }

    if (run_cmd->parsed()) {
      const atd::Fixture& fx = atd::find_fixture(run_fixture, extra);
      atd::AlgorithmOptions options;
      if (algorithm_name == "dr") options.algorithm = atd::Algorithm::dr;
      else if (algorithm_name == "pr_averaged") options.algorithm = atd::Algorithm::averaged;
      else if (algorithm_name == "halpern") options.algorithm = atd::Algorithm::halpern;
      else if (algorithm_name == "haugazeau") options.algorithm = atd::Algorithm::haugazeau;
      else throw atd::UsageError("unknown algorithm: " + algorithm_name);
      if (!x0_text.empty()) options.x0 = parse_vector(x0_text);
      if (!anchor_text.empty()) options.anchor = parse_vector(anchor_text);
      options.lambda = lambda;
      options.tol = tol;
      options.max_iter = max_iter;

      const atd::AlgorithmResult result = atd::run_algorithm(fx, options);
      std::cout << "algorithm '" << algorithm_name << "' on fixture '" << run_fixture
                << "': " << (result.trace.converged ? "converged" : "did NOT converge")
                << " after " << result.trace.iterations_used << " iterations\n";
      if (!csv_path.empty()) {
        atd::write_text_file(resolve_output_path(csv_path),
                             atd::trace_to_csv(result.trace));
      }
      return finish_report(result.report, run_json);
    }

    if (fixtures_cmd->parsed()) {
      const auto loaded = atd::load_fixture_file(load_path);
      bool all_ok = true;
      for (const atd::Fixture& fx : loaded) {
        const auto checks = atd::validate_fixture(fx);
        bool ok = true;
        for (const auto& c : checks) {
          if (!c.pass) {
            std::cout << "  [FAIL] " << fx.name << ": " << c.name << " (residual "
                      << c.actual << ")\n";
            ok = false;
          }
        }
        all_ok = all_ok && ok;
        std::cout << (ok ? "[ok]   " : "[BAD]  ") << fx.name << " (dim "
                  << fx.pair.dim() << ")\n";
      }
      std::cout << loaded.size() << " fixture(s) loaded from " << load_path << "\n";
      return all_ok ? 0 : 1;
    }
  } catch (const atd::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
