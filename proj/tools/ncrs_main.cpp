#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncrs/cli_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Riemann problem toolkit for the nonconservative limiting elastodynamics system"};
  std::string task_name, config_path, out_dir;
  double tol_override = 0.0;
  bool quiet = false;
  app.add_option("task", task_name,
                 "classify | shock-curves | delta-shock | verify-identities | weak-sweep | "
                 "lemma-check | k-limit")
      ->required();
  app.add_option("--config", config_path, "problem configuration (JSON)")->required();
  app.add_option("--out", out_dir, "output directory for report.json and CSV artifacts");
  app.add_option("--tol", tol_override, "override the config tolerance");
  app.add_flag("--quiet", quiet, "suppress console summary");
  CLI11_PARSE(app, argc, argv);

  const auto task = ncrs::parse_task(task_name);
  if (!task) {
    std::cerr << "unknown task '" << task_name << "'\n";
    return 2;
  }

  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "cannot open config: " << config_path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  ncrs::ParseResult parsed = ncrs::parse_config(buf.str());
  if (!parsed.ok()) {
    for (const auto& e : parsed.errors)
      std::cerr << "config error: " << (e.path.empty() ? "<root>" : e.path) << ": " << e.message
                << "\n";
    return 2;
  }
  ncrs::ProblemConfig cfg = *parsed.config;
  if (cfg.task && *cfg.task != *task) {
    std::cerr << "config task '" << ncrs::to_string(*cfg.task)
              << "' does not match the requested task '" << task_name << "'\n";
    return 2;
  }
  cfg.task = *task;
  if (tol_override > 0.0) cfg.tol = tol_override;

  try {
    return ncrs::run(cfg, out_dir, quiet).exit_code;
  } catch (const ncrs::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
