#include <iostream>

#include "CLI11.hpp"

#include "covlie/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for trigonometric and covariant Lie algebras"};
  covlie::CliConfig cfg;

  app.add_option("--suite", cfg.suites, "suite to run (repeatable); omit to list all suites");
  app.add_option("--group", cfg.group, "group spec: Z:N or Zfree")->capture_default_str();
  app.add_option("--l", cfg.l, "matrix size parameter l")->capture_default_str();
  app.add_option("--window-m", cfg.m_bound, "degree window bound M (|m| <= M)")
      ->capture_default_str();
  app.add_option("--workers", cfg.workers,
                 "worker threads (default: COVLIE_WORKERS or 1); reports do not depend on it");
  app.add_option("--report", cfg.report_path, "write the JSON report to this path");
  app.add_flag("--audit", cfg.audit, "cross-check support queries against brute force");
  app.add_flag("--json", cfg.json_listing, "machine-readable suite listing");
  app.set_config("--config", "", "read options from a TOML file (flags win)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  return covlie::run_cli(cfg, std::cout, std::cerr);
}
