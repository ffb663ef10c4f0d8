#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli_app.hpp"
#include "json.hpp"

using namespace conedet;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, FormatReal) {
  EXPECT_EQ(cli::format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(cli::format_real(1.0), "1");
  EXPECT_EQ(cli::format_real(-2.5e-300), "-2.5e-300");
  for (double v : {1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.1 + 0.2}) EXPECT_EQ(std::stod(cli::format_real(v)), v);
  EXPECT_EQ(cli::json_real(std::nan("")), "null");
  EXPECT_EQ(std::stod(cli::format_real(M_PI)), M_PI);
}

TEST(Cli, GridParsing) {
  const auto g = cli::parse_grid("eta=0.1,10,3,log");
  EXPECT_EQ(g.param_name, "eta");
  const auto v = g.values();
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v.front(), 0.1);
  EXPECT_NEAR(v[1], 1.0, 1e-15);
  EXPECT_EQ(v.back(), 10.0);
  EXPECT_EQ(cli::parse_grid("1,2,5", "eta").param_name, "eta");
  EXPECT_THROW(cli::parse_grid("eta=1,2"), cli::usage_failure);
  EXPECT_THROW(cli::parse_grid("eta=2,1,3"), cli::usage_failure);
  EXPECT_THROW(cli::parse_grid("eta=0,1,3,log"), cli::usage_failure);
  EXPECT_THROW(cli::parse_grid("eta=0.1,1,0"), cli::usage_failure);
  EXPECT_THROW(cli::parse_grid("eta=a,1,3"), cli::usage_failure);
}

TEST(Cli, DetJsonHyperbolic) {
  const auto r = run_cli({"det", "hyperbolic", "--a", "1", "--eta", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["formula_tag"], "eq-2");
  EXPECT_EQ(j["params"]["a"], 1.0);
  EXPECT_EQ(j["params"]["eta"], 1.0);
  EXPECT_NEAR(j["value"].get<double>(), logdet_poincare_cap(1.0), 1e-9);
  EXPECT_GT(j["abs_err"].get<double>(), 0.0);
}

TEST(Cli, DetPlainFlatDisk) {
  const auto r = run_cli({"det", "flatdisk", "--r", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("flat-disk r=1 log_det=", 0), 0u) << r.out;
  EXPECT_NE(r.out.find(cli::format_real(logdet_flat_disk(1.0))), std::string::npos);
}

TEST(Cli, DetEveryKind) {
  const std::vector<std::vector<std::string>> cases = {
      {"det", "orbifold", "--w", "3", "--eta", "0.5"}, {"det", "spindle", "--a", "2", "--K", "1"},
      {"det", "sphericalcone", "--a", "2", "--K", "1"}, {"det", "diskcone", "--a", "1", "--K", "0"},
      {"det", "poincarecap", "--eta", "2"}};
  for (const auto& c : cases) {
    const auto r = run_cli(c);
    EXPECT_EQ(r.code, 0) << c[1] << ": " << r.err;
  }
  const auto disk = run_cli({"det", "diskcone", "--a", "1", "--K", "0", "--format", "json"});
  EXPECT_NEAR(json::parse(disk.out)["value"].get<double>(), logdet_flat_disk(2.0), 1e-9);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"det", "nosuchkind"}).code, 1);
  EXPECT_EQ(run_cli({"det", "orbifold", "--w", "0", "--eta", "1"}).code, 1);
  EXPECT_EQ(run_cli({"det", "orbifold", "--w", "2.5", "--eta", "1"}).code, 1);
  EXPECT_EQ(run_cli({"det", "hyperbolic", "--a", "1"}).code, 1);
  EXPECT_EQ(run_cli({"det", "hyperbolic", "--a", "-1", "--eta", "1"}).code, 1);
  EXPECT_EQ(run_cli({"det", "flatdisk", "--r", "1", "--eta", "2"}).code, 1);
  EXPECT_EQ(run_cli({"det", "flatdisk", "--r", "abc"}).code, 1);
  EXPECT_EQ(run_cli({"det", "flatdisk", "--r", "1", "--format", "xml"}).code, 1);
  EXPECT_EQ(run_cli({"table", "flatdisk", "--grid", "r=1,2,3", "--format", "plain"}).code, 1);
  EXPECT_EQ(run_cli({"asympt", "--w", "2", "--grid", "0.5,2,3"}).code, 1);
  EXPECT_EQ(run_cli({"verify", "--tol", "0"}).code, 1);
  const auto r = run_cli({"det", "hyperbolic", "--a", "1"});
  EXPECT_NE(r.err.find("--eta"), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, 0); }

TEST(Cli, VerifyExitCodes) {
  const auto ok = run_cli({"verify"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(lines(ok.out).size(), 19u);
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
  const auto strict = run_cli({"verify", "--tol", "1e-16"});
  EXPECT_EQ(strict.code, 2);
  EXPECT_NE(strict.out.find("FAIL"), std::string::npos);
  const auto j = run_cli({"verify", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const auto parsed = json::parse(j.out);
  ASSERT_EQ(parsed.size(), 19u);
  EXPECT_EQ(parsed[0]["identity_name"], "a1_closed_form");
}

TEST(Cli, QuadratureFailureExitsThree) {
  const auto r = run_cli(
      {"det", "hyperbolic", "--a", "0.3", "--eta", "1", "--quad-tol", "1e-15", "--max-subdiv", "1"});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
}

TEST(Cli, TableCardinalityAndOrder) {
  const auto r =
      run_cli({"table", "hyperbolic", "--grid", "a=0.5,2,4", "--grid", "eta=0.1,10,5,log", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows[0], "a,eta,value,abs_err");
  EXPECT_EQ(rows[1].rfind("0.5,0.10000000000000001,", 0), 0u) << rows[1];
  EXPECT_EQ(rows[2].rfind("0.5,", 0), 0u);
  EXPECT_EQ(rows[20].rfind("2,10,", 0), 0u) << rows[20];
  const auto j = run_cli({"table", "hyperbolic", "--grid", "a=0.5,2,4", "--grid", "eta=0.1,10,5,log", "--format",
                          "json"});
  EXPECT_EQ(json::parse(j.out).size(), 20u);
}

TEST(Cli, TableIsByteIdentical) {
  const std::vector<std::string> args = {"table", "orbifold", "--w", "3", "--grid", "eta=0.01,5,25,log"};
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, SinglePointTableMatchesDet) {
  const auto t = run_cli({"table", "hyperbolic", "--eta", "0.7", "--grid", "a=0.4,0.4,1", "--format", "json"});
  const auto d = run_cli({"det", "hyperbolic", "--a", "0.4", "--eta", "0.7", "--format", "json"});
  ASSERT_EQ(t.code, 0) << t.err;
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(json::parse(t.out)[0]["value"], json::parse(d.out)["value"]);
}

TEST(Cli, AsymptColumns) {
  const auto r = run_cli({"asympt", "--w", "2", "--compare-fp"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "eta,exact,asympt,residual,fp,fp_residual");

  const auto j = json::parse(run_cli({"asympt", "--w", "2", "--compare-fp", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_LT(std::fabs(j[0]["residual"].get<double>()), 1e-7);
  const double c0 = j[0]["fp_residual"].get<double>();
  EXPECT_GT(std::fabs(c0), 0.1);
  EXPECT_NEAR(j[1]["fp_residual"].get<double>(), c0, 1e-5);
  const auto plain = json::parse(run_cli({"asympt", "--w", "2", "--format", "json"}).out);
  EXPECT_FALSE(plain[0].contains("fp"));
}
