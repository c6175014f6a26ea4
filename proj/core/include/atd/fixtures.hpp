#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "atd/duality.hpp"
#include "atd/prox.hpp"
#include "atd/random.hpp"
#include "atd/report.hpp"
#include "atd/sets.hpp"

namespace atd {

enum class Suite { identities, duality, paramonotone, projections, fenchel };

const char* to_string(Suite suite);
Suite suite_from_string(const std::string& name);  // throws UsageError

/// Ground truth about the solution sets of a fixture: exact projectable
/// descriptions of Z and K when known, explicit aligned (z, k) samples,
/// and a generator of random solution pairs in gr K.
struct SolutionDescription {
  std::optional<ConvexSet> z_set;
  std::optional<ConvexSet> k_set;
  std::vector<Vec> sample_z;  // aligned with sample_k: (z_i, k_i) in gr K
  std::vector<Vec> sample_k;
  std::function<std::pair<Vec, Vec>(Rng&)> sample_pair;
};

/// Data driving the Fenchel total-duality oracle for subdifferential pairs.
struct FenchelData {
  ProxFunction f, g;
  Vec box_lo, box_hi;  // bounding box for the dense grid oracle
  double spacing = 1e-3;
  double expected_primal_value = 0.0;
  Vec recover_k0;           // dual witness for primal-set recovery
  std::vector<Vec> probes;  // classified against z_set
};

/// A fixture-specific hand-derived check, tagged with the suite it runs in.
struct Expectation {
  std::string name;
  Suite suite;
  std::function<Check()> run;
};

/*
 * One registry entry: a pair of operators with everything that is known
 * about its primal/dual solution sets, its Douglas-Rachford fixed-point
 * set, and the worked-example values pinned as expectations.
 */
struct Fixture {
  Fixture(std::string name, std::string description, DualPair pair)
      : name(std::move(name)),
        description(std::move(description)),
        pair(std::move(pair)) {}

  std::string name;
  std::string description;
  DualPair pair;
  SolutionDescription solutions;
  std::optional<ConvexSet> fix_t;  // exact description of Fix T
  std::optional<ConvexSet> u_set, v_set;  // underlying sets for feasibility pairs
  std::optional<Vec> common_zero;  // a point of zer A ∩ zer B, if one exists
  std::optional<FenchelData> fenchel;
  // Pair is knowingly non-paramonotone and the Z x K rectangle provably
  // fails; the paramonotone suite runs in expect-failure mode.
  bool expect_rectangle_failure = false;
  std::vector<Expectation> expectations;

  bool has_ground_truth() const {
    return solutions.z_set.has_value() && solutions.k_set.has_value();
  }
};

/// The compiled-in registry reproducing the worked examples.
const std::vector<Fixture>& fixture_registry();

/// Lookup by name over the registry plus optional extra fixtures.
/// Throws UsageError when absent.
const Fixture& find_fixture(const std::string& name,
                            const std::vector<Fixture>& extra = {});

std::vector<std::string> fixture_names(const std::vector<Fixture>& extra = {});

/// Self-validation run on load: operators firmly nonexpansive by sampling,
/// declared samples pass the membership oracles, Fix T points have small
/// fixed-point residual.
std::vector<Check> validate_fixture(const Fixture& fx, int samples = 200,
                                    std::uint64_t seed = 1);

/*
 * Declarative overlay: a JSON document with user fixtures built from
 * serialized operator ASTs.  Supported kinds: normal_cone_box (lo/hi
 * arrays), linear (row-major matrix), constant (vector u), ww_example,
 * prox_hinge (breakpoints/slopes/domain), plus the wrappers inverse,
 * ovee, neg_ovee and composed_lcl.
 */
std::vector<Fixture> load_fixture_file(const std::string& path);

/// Parse one serialized operator AST (JSON text) into an operator.
ResolventOperator parse_operator_ast(const std::string& json_text);

}  // namespace atd
