#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncrs/core.hpp"
#include "ncrs/dlm_paths.hpp"

// Front end: JSON problem configurations, task dispatch across the library,
// and deterministic CSV/JSON artifacts. Identical configs produce
// byte-identical outputs; wall time is reported on the console only.

namespace ncrs {

enum class Task {
  Classify,
  ShockCurves,
  DeltaShock,
  VerifyIdentities,
  WeakSweep,
  LemmaCheck,
  KLimit,
};

const char* to_string(Task t);
std::optional<Task> parse_task(const std::string& name);

struct ThetaSpec {
  double cx = 0.0, wx = 1.0, ct = 0.0, wt = 1.0;
  int degree = 0;
};

struct Theta1DSpec {
  double center = 0.0, width = 1.0;
  int degree = 0;
};

struct GridSpec {
  double min = 0.0, max = 0.0;
  int count = 64;
};

struct ProblemConfig {
  std::optional<Task> task;
  RiemannData data{{2.0, 1.0}, {0.0, 0.0}, 0.0};
  double tol = 1e-10;
  std::vector<double> eps_ladder;       // default 2^-3 .. 2^-9
  std::vector<double> k_ladder;         // default 1e-1 .. 1e-4
  std::vector<double> k_values{0.0, 0.5, 1.0};  // shock-curves
  PathKind path = PathKind::PhiExample;
  std::optional<GridSpec> u_grid;       // shock-curves; default derived from data
  std::vector<ThetaSpec> theta;         // 2-d test functions
  std::vector<Theta1DSpec> theta1d;     // lemma-check test functions
  GridSpec x_grid{-2.0, 2.0, 81};       // delta-shock profile
  std::vector<double> t_samples{0.5, 1.0, 2.0};
  double perturb_speed = 0.0;           // verify-identities witness knob
  std::uint64_t seed = 20260809;        // randomized theta generation
  int n_theta = 20;
  double end_ratio_bound = 1e-2;        // weak-sweep pass rule
};

struct FieldError {
  std::string path;
  std::string message;
};

struct ParseResult {
  std::optional<ProblemConfig> config;
  std::vector<FieldError> errors;
  bool ok() const { return config.has_value() && errors.empty(); }
};

/// Validates JSON text into a config; never throws on bad input, all schema
/// violations are enumerated as (path, message) pairs.
ParseResult parse_config(const std::string& json_text);

struct RunReport {
  int exit_code = 0;        // 0 pass, 1 verification failure
  std::string report_json;  // deterministic artifact (also written to out/)
  double wall_seconds = 0.0;
};

/// Executes the task; writes report.json plus task CSVs under out_dir when
/// non-empty. Input-contract problems surface as ncrs exceptions (the CLI
/// maps them to exit code 2).
RunReport run(const ProblemConfig& config, const std::string& out_dir, bool quiet);

/// Default ladders (documented defaults, overridable in config).
std::vector<double> default_eps_ladder();
std::vector<double> default_k_ladder();

}  // namespace ncrs
