#include <doctest.h>

#include <algorithm>
#include <limits>

#include "cylvar/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cylvar/cli.hpp"
#include "cylvar/scan_io.hpp"

using namespace cylvar;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}
} // namespace

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"energy", "--B", "0"}).code == kExitUsage);
  CHECK(run({"energy", "--B", "0", "--rho0", "-1"}).code == kExitUsage);
  CHECK(run({"energy", "--B", "0", "--rho0", "2", "--coulomb", "maybe"}).code == kExitUsage);
  CHECK(run({"energy", "--B", "0", "--rho0", "2", "--gamma", "0.1"}).code == kExitUsage);
  CHECK(run({"energy", "--B", "0", "--rho0", "2", "--out", "/nonexistent/dir/x.csv"}).code == kExitRuntime);
  CHECK(run({"verify-appendix"}).code == kExitOk);
}

TEST_CASE("energy output parses back") {
  const Run r = run({"energy", "--B", "0", "--rho0", "inf", "--alpha", "1", "--gamma", "0"});
  REQUIRE(r.code == kExitOk);
  std::istringstream is(r.out);
  const auto recs = read_csv(is);
  REQUIRE(recs.size() == 1);
  CHECK(*recs[0].E == doctest::Approx(-0.5).epsilon(1e-6));

  const Run j = run({"energy", "--B", "0", "--rho0", "inf", "--alpha", "1", "--gamma", "0", "--format", "json"});
  std::istringstream js(j.out);
  CHECK(*read_json(js)[0].E == *recs[0].E);
}

TEST_CASE("config file with flag override") {
  const std::string cfg = "cli_test_config.json";
  {
    std::ofstream os(cfg);
    os << R"({"B": 0, "rho0": "inf", "alpha": 0.8, "gamma": 0, "format": "json"})";
  }
  const Run from_cfg = run({"energy", "--config", cfg});
  REQUIRE(from_cfg.code == kExitOk);
  std::istringstream a(from_cfg.out);
  CHECK(*read_json(a)[0].alpha == 0.8);

  const Run over = run({"energy", "--config", cfg, "--alpha", "1"});
  REQUIRE(over.code == kExitOk);
  std::istringstream b(over.out);
  CHECK(*read_json(b)[0].alpha == 1.0);

  {
    std::ofstream os(cfg);
    os << R"({"B": 0, "rho0": 2, "bogus": 1})";
  }
  CHECK(run({"energy", "--config", cfg}).code == kExitUsage);
  std::remove(cfg.c_str());
}

TEST_CASE("scan files are identical across job counts") {
  const std::vector<std::string> base{"scan", "--B-list", "0,0.5", "--rho0-list", "2,3", "--nodes", "32"};
  auto with = [&](const std::string& path, const std::string& jobs) {
    auto a = base;
    a.insert(a.end(), {"--out", path, "--jobs", jobs});
    return run(a).code;
  };
  REQUIRE(with("cli_scan_1.csv", "1") == kExitOk);
  REQUIRE(with("cli_scan_2.csv", "2") == kExitOk);
  const std::string s1 = slurp("cli_scan_1.csv");
  CHECK(s1 == slurp("cli_scan_2.csv"));
  std::istringstream is(s1);
  CHECK(read_csv(is).size() == 4);
  std::remove("cli_scan_1.csv");
  std::remove("cli_scan_2.csv");
}

TEST_CASE("data-file subcommands") {
  const Run b = run({"binding", "--B", "0.4", "--rho0", "3", "--nodes", "32"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.rfind("# B rho0 E E0 Eb\n", 0) == 0);
  const Run c = run({"compare2d", "--B", "0", "--rho0", "3", "--nodes", "32"});
  CHECK(c.code == kExitOk);
  CHECK(run({"compare2d", "--B", "0", "--rho0", "inf"}).code == kExitUsage);
  const Run o = run({"observables", "--B", "0", "--rho0", "inf", "--alpha", "1", "--gamma", "0"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("mean_rho     1.178") != std::string::npos);
}
