// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "latwidth_cli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = latwidth::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kUnit = "H 2\n-1 0 0\n0 -1 0\n1 1 1\n";

// The unit triangle under x -> U·x with U = [[1, 3], [3, 10]]: every flat
// direction has a coordinate of absolute value at least 3.
const char* kSkewedUnit = "H 2\n-1 -3 0\n-3 -10 0\n4 13 1\n";

}  // namespace

TEST(Cli, WidthText) {
  Outcome r = run({"width", "-"}, kUnit);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("width = 1"), std::string::npos) << r.out;
}

TEST(Cli, WidthJsonUsesExactStrings) {
  Outcome r = run({"width", "--json", "-"}, kSkewedUnit);
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "width");
  EXPECT_EQ(j["width"], "1");
  ASSERT_TRUE(j["direction"].is_array());
  for (const auto& x : j["direction"]) EXPECT_TRUE(x.is_string());
}

TEST(Cli, LatticeFreeWidth) {
  Outcome r = run({"width", "--lattice-free", "--json", "-"}, "H 2\n-2 0 -1\n0 -2 -1\n2 2 3\n");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mode"], "lattice-free");
  EXPECT_EQ(j["width"], "1/2");
  EXPECT_EQ(j["delta"], "4");
}

TEST(Cli, DecomposeJson) {
  Outcome r = run({"decompose", "--json", "-"}, "CONE 2\n1 0\n1 4\n");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["determinant"], "4");
  ASSERT_FALSE(j["pieces"].empty());
  for (const auto& p : j["pieces"]) {
    std::string d = p["determinant"];
    EXPECT_TRUE(d == "1" || d == "-1") << d;
  }
}

TEST(Cli, ConeIpFeasibleAndInfeasible) {
  Outcome ok = run({"cone-ip", "--json", "-"},
               "CONEIP 2\nAPEX 1/2 1/2\nGEN 1 0\nGEN 0 1\nROW 1 1 3\nOBJ -1 0\n");
  ASSERT_EQ(ok.code, 0) << ok.err;
  auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j["status"], "feasible");
  EXPECT_EQ(j["value"], "-1");
  Outcome none = run({"cone-ip", "-"}, "CONEIP 2\nAPEX 1/2 1/2\nGEN 1 0\nGEN 0 1\nROW 1 1 0\n");
  EXPECT_EQ(none.code, 1);
}

TEST(Cli, PuncturedOptimum) {
  Outcome r = run({"opt-punctured", "--json", "-"}, "V 2\n0 0\n3 0\n0 3\nOBJ 1 1\n");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], "3");
  Outcome none = run({"opt-punctured", "-"}, "V 2\n0 0\n1 0\n0 1\nOBJ 1 1\n");
  EXPECT_EQ(none.code, 1);
}

TEST(Cli, InputErrorsExitTwo) {
  Outcome bad = run({"width", "-"}, "H 2\n-1 0 0\n0 x 0\n1 1 1\n");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"width", "--no-such-flag", "-"}, kUnit).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"width", "/nonexistent/instance.txt"}).code, 2);
  // A cone IP whose rows leave the dual cone fails its precondition.
  EXPECT_EQ(run({"cone-ip", "-"}, "CONEIP 1\nAPEX 0\nGEN 1\nROW -1 0\n").code, 2);
}

TEST(Cli, BudgetRefusalExitsTwo) {
  Outcome r = run({"oracle", "width", "--oracle-radius", "100", "--budget", "1000", "-"}, kUnit);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("refused"), std::string::npos) << r.err;
}

TEST(Cli, VerifyAgreesAndReportsMismatch) {
  EXPECT_EQ(run({"verify", "width", "-"}, kUnit).code, 0);
  EXPECT_EQ(run({"verify", "decompose", "-"}, "CONE 2\n1 0\n1 4\n").code, 0);
  EXPECT_EQ(run({"verify", "opt-punctured", "-"}, "V 2\n0 0\n3 0\n0 3\nOBJ 1 1\n").code, 0);
  // A search ball of radius 2 misses every flat direction.
  Outcome m = run({"verify", "width", "--oracle-radius", "2", "-"}, kSkewedUnit);
  EXPECT_EQ(m.code, 3);
  EXPECT_NE(m.out.find("MISMATCH"), std::string::npos) << m.out;
}

TEST(Cli, GenRoundTrip) {
  Outcome g = run({"gen", "simplex", "-n", "2", "--seed", "7"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(g.out, run({"gen", "simplex", "-n", "2", "--seed", "7"}).out);
  Outcome w = run({"verify", "width", "-"}, g.out);
  EXPECT_EQ(w.code, 0) << w.out << w.err;
  Outcome c = run({"gen", "cone", "-n", "3", "--det", "6", "--seed", "2"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(run({"verify", "decompose", "-"}, c.out).code, 0);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
