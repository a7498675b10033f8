#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tanglelink/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tanglelink::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tanglelink_test_" + name);
}

void expect_schema(const json& j) {
  for (const char* key : {"input", "methods", "values", "components", "agreement", "discrepancies", "notes"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.size(), 7u);
}

} // namespace

TEST(Cli, LinkingAllMethods) {
  const CliRun r = run({"lk", "R(26/9)", "--method", "all", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  expect_schema(j);
  EXPECT_EQ(j["values"]["tuler"], -3);
  EXPECT_EQ(j["values"]["reduce"], -3);
  EXPECT_EQ(j["values"]["oracle"], -3);
  EXPECT_EQ(j["agreement"], true);
  EXPECT_EQ(j["components"], 2);
}

TEST(Cli, SingleMethodHasNoVerdict) {
  const CliRun r = run({"lk", "26/9", "--method", "tuler", "--json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["agreement"].is_null());
  EXPECT_EQ(j["methods"], json({"tuler"}));
}

TEST(Cli, MontesinosAnchor) {
  const CliRun r = run({"lk", "M(1/1,1/1,1/1,1/1|0)", "--method", "all", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  expect_schema(j);
  EXPECT_EQ(j["components"], 2);
  EXPECT_EQ(j["values"]["theorem"]["theorem"], "T43");
  EXPECT_EQ(j["values"]["theorem"]["pairs"][0]["abs_lk"], 2);
  EXPECT_EQ(std::abs(j["values"]["oracle"]["pairs"][0]["lk"].get<long long>()), 2);
}

TEST(Cli, ComponentsSideBySidePretzel) {
  const CliRun r = run({"components", "M(1/2,1/2,1/2|0)", "--frame", "side-by-side", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["components"], 3);
  EXPECT_EQ(j["values"]["census"]["V"], 3);
  EXPECT_EQ(j["values"]["census"]["D"], 0);
}

TEST(Cli, ComponentsText) {
  const CliRun r = run({"components", "M(1/2,1/2,1/2|0)"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("M(1/2,1/2,1/2|0): 2 components, census V:3 D:0 H:0"), std::string::npos) << r.out;
  const CliRun knot = run({"components", "R(3/2)"});
  EXPECT_NE(knot.out.find("1 component\n"), std::string::npos) << knot.out;
}

TEST(Cli, ClassifyAcceptsNegativeAndConway) {
  const CliRun r = run({"classify", "3/2", "-4/3", "[2,2,2]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "3/2 V [2,1]\n-4/3 H [2,1,-2]\n12/5 H [2,2,2]\n");
}

TEST(Cli, ExplainRendersChain) {
  const CliRun r = run({"explain", "R(26/9)"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lk(R(26/9)) = lk(R(8/9)) + 1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("= -3"), std::string::npos);
  EXPECT_EQ(run({"explain", "M(1/2,1/2,1/2|0)"}).code, 1);
}

TEST(Cli, InputErrorsExitOne) {
  const CliRun odd = run({"lk", "R(3/2)"});
  EXPECT_EQ(odd.code, 1);
  EXPECT_NE(odd.err.find("InvalidSpec"), std::string::npos) << odd.err;

  const CliRun syntax = run({"lk", "M(1/2;1/2)"});
  EXPECT_EQ(syntax.code, 1);
  EXPECT_NE(syntax.err.find("position 5"), std::string::npos) << syntax.err;

  EXPECT_EQ(run({"lk", "R(2/1)", "--method", "theorem"}).code, 1);
  EXPECT_EQ(run({"lk", "M(1/2,1/2,1/2|0)", "--method", "tuler"}).code, 1);
  EXPECT_EQ(run({"lk", "M(1/2,1/2|0)", "--method", "theorem"}).code, 1);
  EXPECT_EQ(run({"lk", "R(2/1)", "--method", "bogus"}).code, 1);
  EXPECT_EQ(run({"lk", "R(2/1)", "--bogus"}).code, 1);
  EXPECT_EQ(run({"lk"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"lk", "R(2/1)", "--strict", "--paper-literal"}).code, 1);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, DiscrepancyExitsTwo) {
  const CliRun r = run({"verify", "M(1/1,1/2,1/2|1)", "--frame", "side-by-side", "--json"});
  EXPECT_EQ(r.code, 2) << r.out << r.err;
  const json j = json::parse(r.out);
  ASSERT_EQ(j["discrepancies"].size(), 1u);
  EXPECT_EQ(j["discrepancies"][0]["method"], "T43");
  EXPECT_EQ(j["discrepancies"][0]["formula"], "3");
  EXPECT_EQ(j["discrepancies"][0]["oracle"], "2");
  EXPECT_EQ(j["agreement"], false);

  EXPECT_EQ(run({"verify", "M(1/1,1/2,1/2|1)"}).code, 0);
}

TEST(Cli, BatchFileAndOut) {
  const auto batch = temp_file("batch.txt");
  const auto out = temp_file("out.json");
  {
    std::ofstream f(batch);
    f << "# anchors\n"
      << "R(26/9)\n"
      << "\n"
      << "M(2/1,2/1,1/1|1)   # two H-tangles\n";
  }
  const CliRun r = run({"verify", "--batch", batch.string(), "--json", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const json j = json::parse(in);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["input"], "R(26/9)");
  EXPECT_EQ(j[1]["values"]["theorem"]["pairs"][0]["abs_lk"], 2);

  {
    std::ofstream f(batch);
    f << "R(2/1)\nR(3/2)\n";
  }
  const CliRun bad = run({"lk", "--batch", batch.string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find(":2"), std::string::npos) << bad.err;
  std::filesystem::remove(batch);
  std::filesystem::remove(out);
}

TEST(Cli, SweepIsDeterministic) {
  const std::vector<std::string> args{"sweep", "--slopes", "1/1,-1/1,1/2,2/1", "--max-e", "1", "--json"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  expect_schema(j);
  EXPECT_EQ(j["values"]["targets"], 4 * 4 * 4 * 3);
}

TEST(Cli, SeededSweep) {
  const std::vector<std::string> args{"sweep", "--seed", "7", "--samples", "50", "--max-n", "5", "--json"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["values"]["targets"], 50);
}

TEST(Cli, RationalSweep) {
  const CliRun r = run({"sweep", "--family", "rational", "--max-p", "10", "--max-q", "11", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["discrepancies"].size(), 0u);
  EXPECT_EQ(j["components"]["2"], j["values"]["targets"]);
}

TEST(Cli, SweepPaperLiteralSideBySideReportsDiscrepancies) {
  const CliRun r = run({"sweep", "--slopes", "1/1,1/2,2/1", "--frame", "side-by-side", "--paper-literal", "--json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(json::parse(r.out)["discrepancies"].empty());
}
