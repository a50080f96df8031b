#pragma once

#include <string>
#include <vector>

#include "orbifold/common.hpp"
#include "orbifold/group.hpp"

namespace orbifold {

// A resolved "<group-spec>/<subgroup-selector>" pair with normality verified.
struct Instance {
  std::string spec;
  FiniteGroup m;
  std::vector<int> n_members;
};

// Throws SpecParseError on grammar problems, NotNormal when the selected
// subgroup is not normal, and DegenerateInstance for a trivial or full
// subgroup unless allow_degenerate is set.
Instance resolve_instance(const std::string& spec, bool allow_degenerate = false,
                          long max_order = 64);

struct SuiteConfig {
  std::vector<std::string> instances;
  std::vector<std::string> checks;  // empty = all
  ToleranceConfig tol;
  bool allow_degenerate = false;
  long max_order = 64;
};

const std::vector<std::string>& default_catalog();
const std::vector<std::string>& all_check_names();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct OrbitReport {
  std::vector<std::string> labels;
  long stab_order = 1;
  long alpha_regular = 0;
  bool cocycle_trivial = true;
};

struct DSimpleReport {
  int orbit = 0;
  int lambda_deg = 1;
  long dim = 1;
};

struct BijectionEntry {
  int d_simple = 0;
  std::string double_label;
};

struct EquivalenceReport {
  std::string input;
  std::vector<OrbitReport> orbits;
  std::vector<DSimpleReport> d_simples;
  std::vector<CheckResult> checks;
  std::vector<BijectionEntry> bijection;  // present when the match check passed
  bool pass = true;
  double seconds = 0.0;  // text output only, excluded from the canonical JSON
};

struct SuiteReport {
  std::string schema_version = "1";
  std::vector<EquivalenceReport> instances;
  bool pass = true;
};

// Runs the named checks (in the fixed canonical order) on one instance.
// Theorem-level failures are recorded as failing checks, never thrown.
EquivalenceReport run_instance_checks(const Instance& inst, const std::vector<std::string>& checks,
                                      const ToleranceConfig& tol);

// Resolves every instance up front (refusing to start on a bad one), then
// runs the selected checks on each.
SuiteReport run_verify_suite(const SuiteConfig& cfg);

// format "json": canonical (sorted keys, rationals as "p/q") and
// byte-reproducible for a fixed config and seed; format "text": a human
// summary, one line per check.
std::string emit_report(const SuiteReport& r, const std::string& format);

// Payloads for the single-purpose command verbs, canonical JSON.
std::string equivalence_report_json(const EquivalenceReport& er);
std::string group_info_json(const FiniteGroup& m);
std::string double_data_json(const FiniteGroup& m);
std::string repa_json(const Instance& inst, const ToleranceConfig& tol);
std::string orbifold_json(const Instance& inst, const ToleranceConfig& tol);
std::string clifford_json(const Instance& inst, const ToleranceConfig& tol);

}  // namespace orbifold
