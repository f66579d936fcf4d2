#include "ncrs/cli_io.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ncrs/delta_shock.hpp"
#include "ncrs/identity_verify.hpp"
#include "ncrs/parallel.hpp"
#include "ncrs/rh_shock.hpp"
#include "ncrs/test_functions.hpp"
#include "ncrs/weak_asymptotics.hpp"

namespace ncrs {

using json = nlohmann::ordered_json;

const char* to_string(Task t) {
  switch (t) {
    case Task::Classify: return "classify";
    case Task::ShockCurves: return "shock-curves";
    case Task::DeltaShock: return "delta-shock";
    case Task::VerifyIdentities: return "verify-identities";
    case Task::WeakSweep: return "weak-sweep";
    case Task::LemmaCheck: return "lemma-check";
    case Task::KLimit: return "k-limit";
  }
  return "?";
}

std::optional<Task> parse_task(const std::string& name) {
  for (Task t : {Task::Classify, Task::ShockCurves, Task::DeltaShock, Task::VerifyIdentities,
                 Task::WeakSweep, Task::LemmaCheck, Task::KLimit})
    if (name == to_string(t)) return t;
  return std::nullopt;
}

std::vector<double> default_eps_ladder() {
  std::vector<double> v;
  for (int k = 3; k <= 9; ++k) v.push_back(std::ldexp(1.0, -k));
  return v;
}

std::vector<double> default_k_ladder() { return {1e-1, 1e-2, 1e-3, 1e-4}; }

namespace {

const char* const kAllowedKeys[] = {
    "task",    "uL",       "sigmaL",   "uR",        "sigmaR",        "k",
    "tol",     "eps_ladder", "k_ladder", "k_values", "path",          "u_grid",
    "theta",   "theta1d",  "x_grid",   "t_samples", "perturb_speed", "seed",
    "n_theta", "end_ratio_bound"};

bool key_allowed(const std::string& k) {
  for (const char* a : kAllowedKeys)
    if (k == a) return true;
  return false;
}

double get_num(const json& j, const std::string& key, double fallback,
               std::vector<FieldError>& errors) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) {
    errors.push_back({key, "must be a number"});
    return fallback;
  }
  const double v = j[key].get<double>();
  if (!std::isfinite(v)) errors.push_back({key, "must be finite"});
  return v;
}

std::vector<double> get_ladder(const json& j, const std::string& key, bool decreasing,
                               std::vector<FieldError>& errors) {
  std::vector<double> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) {
    errors.push_back({key, "must be an array of numbers"});
    return out;
  }
  for (const auto& e : j[key]) {
    if (!e.is_number() || !std::isfinite(e.get<double>())) {
      errors.push_back({key, "entries must be finite numbers"});
      return {};
    }
    out.push_back(e.get<double>());
  }
  for (size_t i = 0; i < out.size(); ++i) {
    if (!(out[i] > 0.0)) {
      errors.push_back({key, "entries must be positive"});
      break;
    }
    if (decreasing && i > 0 && !(out[i] < out[i - 1])) {
      errors.push_back({key, "ladder must decrease"});
      break;
    }
  }
  return out;
}

json config_echo(const ProblemConfig& c) {
  json e;
  if (c.task) e["task"] = to_string(*c.task);
  e["uL"] = c.data.left.u;
  e["sigmaL"] = c.data.left.sigma;
  e["uR"] = c.data.right.u;
  e["sigmaR"] = c.data.right.sigma;
  e["k"] = c.data.k;
  e["tol"] = c.tol;
  e["path"] = to_string(c.path);
  e["eps_ladder"] = c.eps_ladder.empty() ? default_eps_ladder() : c.eps_ladder;
  e["k_ladder"] = c.k_ladder.empty() ? default_k_ladder() : c.k_ladder;
  e["seed"] = c.seed;
  return e;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write output file in " + dir);
  out << content;
}

std::vector<TestFunction> default_identity_thetas(const ProblemConfig& cfg, double front_speed) {
  std::vector<TestFunction> out;
  for (const ThetaSpec& s : cfg.theta)
    out.push_back(make_test_function(s.cx, s.wx, s.ct, s.wt, s.degree));
  if (!out.empty()) return out;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uw(0.8, 2.2), ut(0.6, 1.6), uc(0.4, 2.4),
      ush(-0.6, 0.6);
  for (int i = 0; i < cfg.n_theta; ++i) {
    const double ct = uc(rng);
    const double wt = ut(rng);
    const double cx = front_speed * ct + ush(rng);
    const double wx = uw(rng);
    out.push_back(make_test_function(cx, wx, ct, wt, i % 3 == 2 ? 2 : 0));
  }
  return out;
}

std::vector<TestFunction> default_sweep_thetas(const ProblemConfig& cfg, double front_speed) {
  std::vector<TestFunction> out;
  for (const ThetaSpec& s : cfg.theta)
    out.push_back(make_test_function(s.cx, s.wx, s.ct, s.wt, s.degree));
  if (!out.empty()) return out;
  out.push_back(make_test_function(front_speed * 1.5, 1.5, 1.5, 1.0, 0));
  out.push_back(make_test_function(front_speed * 1.0, 1.0, 1.0, 0.6, 0));
  out.push_back(make_test_function(front_speed * 2.0, 1.2, 2.0, 0.8, 1));
  return out;
}

std::vector<Theta1DSpec> default_lemma_thetas(const ProblemConfig& cfg) {
  if (!cfg.theta1d.empty()) return cfg.theta1d;
  return {{0.0, 6.0, 0}, {-2.25, 5.0, 0}, {2.4, 5.2, 0}, {0.0, 4.5, 1}, {2.07, 4.6, 2}};
}

json run_classify(const ProblemConfig& cfg, bool& pass) {
  const RiemannClassification rc = classify_riemann(cfg.data);
  json out;
  out["class"] = to_string(rc.cls);
  if (rc.speed) out["speed"] = *rc.speed;
  if (rc.grh) {
    out["phi_dot"] = rc.grh->phi_dot;
    out["e_dot"] = rc.grh->e_dot;
  }
  if (rc.admissibility) {
    const AdmissibilityReport& a = *rc.admissibility;
    out["admissibility"] = json{{"lax_ok", a.lax_ok},
                                {"overcompressive", a.overcompressive},
                                {"raw_chain_ok", a.raw_chain_ok},
                                {"u0", a.u0},
                                {"u1", a.u1},
                                {"sigma1", a.sigma1}};
    if (std::isfinite(a.phi_dot)) out["admissibility"]["phi_dot"] = a.phi_dot;
  }
  const VolpertClassification vc = volpert_shock_exists(cfg.data);
  json vj;
  switch (vc.kind) {
    case VolpertKind::ConstantState: vj["kind"] = "constant-state"; break;
    case VolpertKind::NoShock:
      vj["kind"] = "no-shock";
      vj["sigma_jump_witness"] = vc.sigma_jump;
      break;
    case VolpertKind::BurgersShock:
      vj["kind"] = "burgers-shock";
      vj["speed"] = vc.speed;
      break;
    case VolpertKind::NotAShock: vj["kind"] = "not-a-shock"; break;
  }
  out["volpert"] = vj;
  const RarefactionClassification rf = rarefaction_possible(cfg.data);
  out["rarefaction"] =
      json{{"kind", rf.kind == RarefactionKind::Impossible          ? "impossible"
                    : rf.kind == RarefactionKind::TrivialConstantSigma ? "trivial-constant-sigma"
                                                                       : "not-applicable"},
           {"reason", rf.reason}};
  pass = true;
  return out;
}

json run_shock_curves(const ProblemConfig& cfg, const std::string& out_dir, bool& pass) {
  const State left = cfg.data.left;
  GridSpec grid = cfg.u_grid.value_or(GridSpec{left.u - 4.0, left.u, 64});
  std::ostringstream csv;
  std::vector<double> ks = cfg.k_values;
  sample_shock_curves_csv(csv, left, ks, cfg.path, grid.min, grid.count);
  write_file(out_dir, "curves.csv", csv.str());
  json out;
  out["csv"] = "curves.csv";
  out["k_values"] = ks;
  out["rows_per_k"] = grid.count;
  pass = true;
  return out;
}

json run_delta_shock(const ProblemConfig& cfg, const std::string& out_dir, bool& pass) {
  const DeltaShockSolution sol = build_delta_shock(cfg.data);
  std::vector<double> xs;
  for (int i = 0; i < cfg.x_grid.count; ++i)
    xs.push_back(cfg.x_grid.min +
                 (cfg.x_grid.max - cfg.x_grid.min) * i / std::max(1, cfg.x_grid.count - 1));
  std::ostringstream csv;
  write_profile_csv(csv, sol, xs, cfg.t_samples);
  write_file(out_dir, "profile.csv", csv.str());
  json out;
  out["phi_dot"] = sol.s;
  out["e_dot"] = sol.e_dot;
  out["csv"] = "profile.csv";
  json sidecar = json::array();
  for (double t : cfg.t_samples)
    sidecar.push_back(json{{"t", t}, {"front", sol.front(t)}, {"e", sol.amplitude(t)}});
  out["front_record"] = sidecar;  // the concentration has no pointwise values
  pass = true;
  return out;
}

json run_verify_identities(const ProblemConfig& cfg, bool& pass) {
  DeltaShockSolution sol = build_delta_shock(cfg.data);
  sol.s += cfg.perturb_speed;
  const std::vector<TestFunction> thetas = default_identity_thetas(cfg, sol.s);
  std::vector<IdentityResidualPair> res(thetas.size());
  parallel_for(thetas.size(), [&](size_t i) { res[i] = identity_residuals(sol, thetas[i]); });
  json rows = json::array();
  double worst1 = 0.0, worst2 = 0.0;
  for (size_t i = 0; i < thetas.size(); ++i) {
    rows.push_back(json{{"theta",
                         json{{"cx", thetas[i].cx},
                              {"wx", thetas[i].wx},
                              {"ct", thetas[i].ct},
                              {"wt", thetas[i].wt},
                              {"degree", thetas[i].mod_degree}}},
                        {"id1", res[i].id1},
                        {"id2", res[i].id2},
                        {"pass", res[i].id1 <= cfg.tol && res[i].id2 <= cfg.tol}});
    worst1 = std::max(worst1, res[i].id1);
    worst2 = std::max(worst2, res[i].id2);
  }
  json out;
  out["front_speed"] = sol.s;
  out["perturb_speed"] = cfg.perturb_speed;
  out["analytic_balance"] =
      cfg.data.left.u != cfg.data.right.u ? json(analytic_balance(cfg.data)) : json(nullptr);
  out["per_theta"] = rows;
  out["worst_id1"] = worst1;
  out["worst_id2"] = worst2;
  out["tol"] = cfg.tol;
  pass = worst1 <= cfg.tol && worst2 <= cfg.tol;
  return out;
}

json run_weak_sweep(const ProblemConfig& cfg, const std::string& out_dir, bool& pass) {
  const std::vector<double> ladder =
      cfg.eps_ladder.empty() ? default_eps_ladder() : cfg.eps_ladder;
  const double s = cfg.data.left.u != cfg.data.right.u ? generalized_rh(cfg.data).phi_dot
                                                       : cfg.data.left.u;
  const std::vector<TestFunction> thetas = default_sweep_thetas(cfg, s);
  std::ostringstream csv;
  csv << "theta_index,eps,r1,r2\n";
  json out_thetas = json::array();
  pass = true;
  for (size_t i = 0; i < thetas.size(); ++i) {
    const ResidualReport rep = residual_sweep(cfg.data, thetas[i], ladder);
    for (size_t j = 0; j < rep.eps_ladder.size(); ++j)
      csv << i << "," << fmt(rep.eps_ladder[j]) << "," << fmt(rep.r1[j]) << ","
          << fmt(rep.r2[j]) << "\n";
    json tj;
    tj["theta"] = json{{"cx", thetas[i].cx},
                       {"wx", thetas[i].wx},
                       {"ct", thetas[i].ct},
                       {"wt", thetas[i].wt},
                       {"degree", thetas[i].mod_degree}};
    tj["eps_ladder"] = rep.eps_ladder;
    tj["r1"] = rep.r1;
    tj["r2"] = rep.r2;
    tj["monotone"] = rep.monotone1 && rep.monotone2;
    if (rep.slopes_defined) {
      tj["slope1"] = rep.slope1;
      tj["slope2"] = rep.slope2;
    } else {
      tj["slope1"] = nullptr;  // residuals at quadrature floor (exact solution)
      tj["slope2"] = nullptr;
    }
    tj["end_ratio1"] = rep.end_ratio1;
    tj["end_ratio2"] = rep.end_ratio2;
    const bool theta_pass = rep.slopes_defined ? rep.pass(cfg.end_ratio_bound) : true;
    tj["pass"] = theta_pass;
    pass = pass && theta_pass;
    out_thetas.push_back(tj);
  }
  write_file(out_dir, "residuals.csv", csv.str());
  json out;
  out["end_ratio_bound"] = cfg.end_ratio_bound;
  out["per_theta"] = out_thetas;
  out["csv"] = "residuals.csv";
  return out;
}

json run_lemma_check(const ProblemConfig& cfg, const std::string& out_dir, bool& pass) {
  const std::vector<double> ladder =
      cfg.eps_ladder.empty() ? default_eps_ladder() : cfg.eps_ladder;
  const HeavisideForm h = to_heaviside_form(cfg.data);
  const double c = h.u1 != 0.0 ? 0.5 - h.sigma1 / (h.u1 * h.u1) : 0.5;
  const RegularizedPieces pieces = make_pieces(c);
  const std::vector<Theta1DSpec> specs = default_lemma_thetas(cfg);
  std::vector<TestFunction1D> thetas;
  for (const auto& s : specs) thetas.push_back(make_test_function_1d(s.center, s.width, s.degree));

  std::ostringstream csv;
  csv << "term,theta_index,eps,value,limit\n";
  json terms = json::array();
  pass = true;
  for (ExpansionTerm term : kAllExpansionTerms) {
    json per_theta = json::array();
    for (size_t ti = 0; ti < thetas.size(); ++ti) {
      const double limit = expansion_limit(term, pieces, thetas[ti]);
      double dev_min_eps = 0.0;
      for (double eps : ladder) {
        const double v = expansion_term(term, pieces, thetas[ti], eps);
        csv << to_string(term) << "," << ti << "," << fmt(eps) << "," << fmt(v) << ","
            << fmt(limit) << "\n";
        dev_min_eps = std::abs(v - limit);  // ladder decreases; keep the last
      }
      const double bar = limit != 0.0 ? 1e-2 * std::abs(limit) : 1e-2;
      per_theta.push_back(json{{"theta_index", ti},
                               {"limit", limit},
                               {"deviation_at_min_eps", dev_min_eps},
                               {"bar", bar},
                               {"pass", dev_min_eps < bar}});
      if (!(dev_min_eps < bar)) pass = false;
    }
    terms.push_back(json{{"term", to_string(term)}, {"per_theta", per_theta}});
  }
  write_file(out_dir, "lemma.csv", csv.str());
  json out;
  out["plateau_c"] = c;
  out["terms"] = terms;
  out["csv"] = "lemma.csv";
  return out;
}

json run_k_limit(const ProblemConfig& cfg, const std::string& out_dir, bool& pass) {
  const std::vector<double> ladder = cfg.k_ladder.empty() ? default_k_ladder() : cfg.k_ladder;
  const KLimitReport rep = k_limit_report(cfg.data.left, cfg.data.right.u, cfg.path, ladder);
  std::ostringstream csv;
  csv << "k,s2_error,s1_jump\n";
  for (size_t i = 0; i < rep.ks.size(); ++i)
    csv << fmt(rep.ks[i]) << "," << fmt(rep.s2_error[i]) << "," << fmt(rep.s1_jump[i]) << "\n";
  write_file(out_dir, "klimit.csv", csv.str());
  json out;
  out["sigma_limit"] = rep.sigma_limit;
  out["ks"] = rep.ks;
  out["s2_error"] = rep.s2_error;
  out["s1_jump"] = rep.s1_jump;
  out["slope_s2"] = rep.slope_s2;
  out["slope_s1"] = rep.slope_s1;
  out["csv"] = "klimit.csv";
  pass = std::abs(rep.slope_s2 - 2.0) <= 0.05 && std::abs(rep.slope_s1 - 2.0) <= 0.05;
  return out;
}

}  // namespace

ParseResult parse_config(const std::string& json_text) {
  ParseResult result;
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) {
    result.errors.push_back({"", "invalid JSON"});
    return result;
  }
  if (!j.is_object()) {
    result.errors.push_back({"", "config must be a JSON object"});
    return result;
  }
  std::vector<FieldError>& errors = result.errors;
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!key_allowed(it.key())) errors.push_back({it.key(), "unknown field"});

  ProblemConfig cfg;
  if (j.contains("task")) {
    if (!j["task"].is_string()) {
      errors.push_back({"task", "must be a string"});
    } else {
      cfg.task = parse_task(j["task"].get<std::string>());
      if (!cfg.task) errors.push_back({"task", "unknown task '" + j["task"].get<std::string>() + "'"});
    }
  }
  cfg.data.left.u = get_num(j, "uL", cfg.data.left.u, errors);
  cfg.data.left.sigma = get_num(j, "sigmaL", cfg.data.left.sigma, errors);
  cfg.data.right.u = get_num(j, "uR", cfg.data.right.u, errors);
  cfg.data.right.sigma = get_num(j, "sigmaR", cfg.data.right.sigma, errors);
  cfg.data.k = get_num(j, "k", cfg.data.k, errors);
  if (std::isfinite(cfg.data.k) && cfg.data.k < 0.0) errors.push_back({"k", "k must be >= 0"});
  cfg.tol = get_num(j, "tol", cfg.tol, errors);
  if (!(cfg.tol > 0.0)) errors.push_back({"tol", "must be positive"});
  cfg.eps_ladder = get_ladder(j, "eps_ladder", true, errors);
  cfg.k_ladder = get_ladder(j, "k_ladder", true, errors);
  if (j.contains("k_values")) {
    if (!j["k_values"].is_array()) {
      errors.push_back({"k_values", "must be an array"});
    } else {
      cfg.k_values.clear();
      for (const auto& e : j["k_values"]) {
        if (!e.is_number() || e.get<double>() < 0.0 || !std::isfinite(e.get<double>())) {
          errors.push_back({"k_values", "entries must be finite and >= 0"});
          break;
        }
        cfg.k_values.push_back(e.get<double>());
      }
    }
  }
  if (j.contains("path")) {
    const std::string p = j["path"].is_string() ? j["path"].get<std::string>() : "";
    if (p == "phi") cfg.path = PathKind::PhiExample;
    else if (p == "phi-tilde") cfg.path = PathKind::PhiTildeExample;
    else if (p == "straight-line") cfg.path = PathKind::StraightLine;
    else errors.push_back({"path", "must be one of phi, phi-tilde, straight-line"});
  }
  auto read_grid = [&](const char* key, GridSpec g) {
    if (!j.contains(key)) return g;
    const json& gj = j[key];
    if (!gj.is_object()) {
      errors.push_back({key, "must be an object {min,max,count}"});
      return g;
    }
    g.min = gj.value("min", g.min);
    g.max = gj.value("max", g.max);
    g.count = gj.value("count", g.count);
    if (g.count < 2) errors.push_back({std::string(key) + ".count", "must be >= 2"});
    if (!(g.min < g.max)) errors.push_back({key, "min must be < max"});
    return g;
  };
  if (j.contains("u_grid")) cfg.u_grid = read_grid("u_grid", GridSpec{cfg.data.left.u - 4.0, cfg.data.left.u, 64});
  cfg.x_grid = read_grid("x_grid", cfg.x_grid);
  if (j.contains("t_samples")) {
    cfg.t_samples.clear();
    if (!j["t_samples"].is_array()) errors.push_back({"t_samples", "must be an array"});
    else
      for (const auto& e : j["t_samples"]) {
        if (!e.is_number() || e.get<double>() < 0.0) {
          errors.push_back({"t_samples", "entries must be >= 0"});
          break;
        }
        cfg.t_samples.push_back(e.get<double>());
      }
  }
  auto read_thetas = [&](const char* key) {
    std::vector<ThetaSpec> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) {
      errors.push_back({key, "must be an array of objects"});
      return out;
    }
    int idx = 0;
    for (const auto& e : j[key]) {
      ThetaSpec s;
      const std::string at = std::string(key) + "[" + std::to_string(idx++) + "]";
      if (!e.is_object()) {
        errors.push_back({at, "must be an object"});
        continue;
      }
      s.cx = e.value("cx", 0.0);
      s.wx = e.value("wx", 1.0);
      s.ct = e.value("ct", 0.0);
      s.wt = e.value("wt", 1.0);
      s.degree = e.value("degree", 0);
      if (!(s.wx > 0.0) || !(s.wt > 0.0)) errors.push_back({at, "widths must be positive"});
      if (s.degree < 0 || s.degree > 2) errors.push_back({at, "degree must be 0, 1 or 2"});
      out.push_back(s);
    }
    return out;
  };
  cfg.theta = read_thetas("theta");
  if (j.contains("theta1d")) {
    if (!j["theta1d"].is_array()) {
      errors.push_back({"theta1d", "must be an array of objects"});
    } else {
      int idx = 0;
      for (const auto& e : j["theta1d"]) {
        Theta1DSpec s;
        const std::string at = "theta1d[" + std::to_string(idx++) + "]";
        s.center = e.value("center", 0.0);
        s.width = e.value("width", 1.0);
        s.degree = e.value("degree", 0);
        if (!(s.width > 0.0)) errors.push_back({at, "width must be positive"});
        if (s.degree < 0 || s.degree > 2) errors.push_back({at, "degree must be 0, 1 or 2"});
        cfg.theta1d.push_back(s);
      }
    }
  }
  cfg.perturb_speed = get_num(j, "perturb_speed", 0.0, errors);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) errors.push_back({"seed", "must be a non-negative integer"});
    else cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("n_theta")) {
    if (!j["n_theta"].is_number_integer() || j["n_theta"].get<int>() < 1)
      errors.push_back({"n_theta", "must be a positive integer"});
    else cfg.n_theta = j["n_theta"].get<int>();
  }
  cfg.end_ratio_bound = get_num(j, "end_ratio_bound", cfg.end_ratio_bound, errors);

  if (errors.empty()) result.config = cfg;
  return result;
}

RunReport run(const ProblemConfig& config, const std::string& out_dir, bool quiet) {
  if (!config.task) throw InvalidArgument("no task selected");
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  json result;
  switch (*config.task) {
    case Task::Classify: result = run_classify(config, pass); break;
    case Task::ShockCurves: result = run_shock_curves(config, out_dir, pass); break;
    case Task::DeltaShock: result = run_delta_shock(config, out_dir, pass); break;
    case Task::VerifyIdentities: result = run_verify_identities(config, pass); break;
    case Task::WeakSweep: result = run_weak_sweep(config, out_dir, pass); break;
    case Task::LemmaCheck: result = run_lemma_check(config, out_dir, pass); break;
    case Task::KLimit: result = run_k_limit(config, out_dir, pass); break;
  }

  json report;
  report["format_version"] = 1;
  report["tool"] = "ncrs";
  report["version"] = kVersion;
  report["task"] = to_string(*config.task);
  report["config"] = config_echo(config);
  report["result"] = result;
  report["pass"] = pass;

  RunReport out;
  out.exit_code = pass ? 0 : 1;
  out.report_json = report.dump(2) + "\n";
  write_file(out_dir, "report.json", out.report_json);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!quiet) {
    std::cout << "task " << to_string(*config.task) << (pass ? ": pass" : ": FAIL") << " ("
              << out.wall_seconds << " s)\n";
    if (out_dir.empty()) std::cout << out.report_json;
  }
  return out;
}

}  // namespace ncrs
