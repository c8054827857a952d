#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "covlie/groups.hpp"
#include "covlie/report.hpp"

namespace covlie {

struct SuiteParams {
  AbelianGroup group = AbelianGroup::cyclic(5);
  long long l = 3;
  long long m_bound = 2;
  int workers = 1;
  bool audit = false;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::function<Report(const SuiteParams&)> run;
};

/// All registered verification suites, in a fixed order.
const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);

struct CliConfig {
  std::vector<std::string> suites;  // empty: list the registry
  std::string group = "Z:5";
  long long l = 3;
  long long m_bound = 2;
  int workers = 0;  // 0: use COVLIE_WORKERS, else 1
  std::string report_path;
  bool audit = false;
  bool json_listing = false;
};

/// Runs the selected suites and writes the JSON report (byte-identical for
/// equal configs regardless of worker count). Exit code 0 when every check
/// passes, 1 on check failures, 2 on configuration errors.
int run_cli(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace covlie
