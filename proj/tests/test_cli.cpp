#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "covlie/suites.hpp"

using namespace covlie;

TEST_CASE("the registry lists at least 15 suites with descriptions") {
  CHECK(suite_registry().size() >= 15);
  for (const auto& s : suite_registry()) {
    CHECK(!s.name.empty());
    CHECK(!s.description.empty());
    CHECK(s.run != nullptr);
  }
  CHECK(find_suite("cov.psiA") != nullptr);
  CHECK(find_suite("nope") == nullptr);
}

TEST_CASE("listing mode, text and json") {
  CliConfig cfg;
  std::ostringstream out, err;
  CHECK(run_cli(cfg, out, err) == 0);
  CHECK(out.str().find("trig.jacobi") != std::string::npos);

  CliConfig jcfg;
  jcfg.json_listing = true;
  std::ostringstream jout, jerr;
  CHECK(run_cli(jcfg, jout, jerr) == 0);
  Json j = Json::parse(jout.str());
  CHECK(j.is_array());
  CHECK(j.size() >= 15);
  CHECK(j[0].contains("name"));
  CHECK(j[0].contains("description"));
}

TEST_CASE("configuration errors exit with code 2") {
  {
    CliConfig cfg;
    cfg.suites = {"bogus"};
    std::ostringstream out, err;
    CHECK(run_cli(cfg, out, err) == 2);
    CHECK(err.str().find("bogus") != std::string::npos);
  }
  {
    CliConfig cfg;
    cfg.suites = {"trig.jacobi"};
    cfg.group = "Q:5";
    std::ostringstream out, err;
    CHECK(run_cli(cfg, out, err) == 2);
  }
  {
    CliConfig cfg;
    cfg.suites = {"trig.jacobi"};
    cfg.m_bound = 0;
    std::ostringstream out, err;
    CHECK(run_cli(cfg, out, err) == 2);
  }
  {
    // A suite whose preconditions reject the group is a configuration error.
    CliConfig cfg;
    cfg.suites = {"cov.invariant"};
    cfg.group = "Zfree";
    std::ostringstream out, err;
    CHECK(run_cli(cfg, out, err) == 2);
  }
}

TEST_CASE("a passing run exits 0 and prints identical reports across configs") {
  CliConfig cfg;
  cfg.suites = {"mat.pq"};
  cfg.l = 2;
  std::ostringstream out1, err1;
  CHECK(run_cli(cfg, out1, err1) == 0);

  CliConfig cfg2 = cfg;
  cfg2.workers = 4;
  std::ostringstream out2, err2;
  CHECK(run_cli(cfg2, out2, err2) == 0);
  CHECK(out1.str() == out2.str());
}

TEST_CASE("report schema") {
  Report rep{"demo", {}};
  rep.add("ok", true, Json{{"x", 1}});
  rep.add("bad", false, Json::object(), Json("w"));
  Json j = rep.to_json();
  CHECK(j.at("suite") == "demo");
  CHECK(j.at("checks").size() == 2);
  CHECK(j.at("checks")[0].at("status") == "pass");
  CHECK(j.at("checks")[0].at("witness").is_null());
  CHECK(j.at("checks")[1].at("status") == "fail");
  CHECK(j.at("checks")[1].at("witness") == Json("w"));
  CHECK(!rep.all_pass());
  CHECK(rep.fail_count() == 1);
}
