#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cboom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cboom::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

void expect_usage_error(const std::vector<std::string>& args) {
  const auto r = cli(args);
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_TRUE(r.out.empty());
  ASSERT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
}

}  // namespace

TEST(Cli, FieldDocument) {
  const auto r = cli({"field", "--p", "2", "--n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["spec"]["modulus"], (std::vector<int>{1, 1, 0, 0, 1}));
  EXPECT_EQ(j["generator_order"], 15);
  EXPECT_EQ(j["order_proof"]["checks"].size(), 2u);
  for (const auto& c : j["order_proof"]["checks"]) EXPECT_FALSE(c["is_one"].get<bool>());
  EXPECT_EQ(cli({"field", "--field", "p=2,n=5,modulus=[1,0,1,0,0,1]"}).code, 0);
  EXPECT_EQ(cli({"field", "--p", "2", "--n", "6", "--modulus", "1,1,0,0,0,0,1"}).code, 0);
}

TEST(Cli, SquareBctValues) {
  const auto r = cli({"bct", "--p", "3", "--n", "2", "--func", "x^2", "--c", "all", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["tables"].size(), 8u);
  for (const auto& t : j["tables"]) {
    if (t["c"] == "1") continue;
    const auto& e = t["entries"];
    for (std::size_t a = 1; a < 9; ++a)
      for (std::size_t b = 1; b < 9; ++b) EXPECT_LE(e[a][b].get<int>(), 2);
  }
}

TEST(Cli, OracleAgrees) {
  const auto a = cli({"bct", "--p", "3", "--n", "2", "--family", "inverse", "--c", "2*a + 1"});
  const auto b = cli({"bct", "--p", "3", "--n", "2", "--family", "inverse", "--c", "2*a + 1", "--oracle"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, DdtFormats) {
  const auto csv = cli({"ddt", "--p", "2", "--n", "3", "--family", "inverse", "--c", "a", "--format", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out.rfind("# c=a\na,0,1,2", 0), 0u);
  const auto pretty = cli({"ddt", "--p", "2", "--n", "3", "--family", "inverse", "--format", "pretty"});
  EXPECT_EQ(std::count(pretty.out.begin(), pretty.out.end(), '\n'), 7);
  // c = 0 is a legal c-DDT multiplier
  EXPECT_EQ(cli({"ddt", "--p", "2", "--n", "3", "--family", "inverse", "--c", "0"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"atlas", "--family", "half_gold", "--k", "2", "--p", "3", "--n", "3"};
  auto w1 = args, w4 = args;
  w1.insert(w1.end(), {"--workers", "1"});
  w4.insert(w4.end(), {"--workers", "4"});
  EXPECT_EQ(cli(w1).out, cli(w4).out);
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, AtlasExpectPaper) {
  const auto r = cli({"atlas", "--family", "gold", "--k", "2", "--p", "3", "--n", "4", "--expect", "paper"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["diff"]["pass"].get<bool>());
  EXPECT_EQ(j["value_set"], (std::vector<int>{1, 2, 4, 72, 73, 81, 82, 90, 91, 100}));
  EXPECT_EQ(cli({"atlas", "--family", "inverse", "--p", "2", "--n", "4", "--expect", "appendix"}).code, 0);
}

TEST(Cli, AtlasDobReadings) {
  const std::vector<std::string> base{"atlas", "--family", "dob", "--u", "1", "--p", "3", "--n", "3", "--expect", "paper"};
  const auto full = cli(base);
  EXPECT_EQ(full.code, 1);
  EXPECT_EQ(nlohmann::json::parse(full.out)["diff"]["matching"], std::vector<std::string>{"row_one"});
  auto row = base;
  row.insert(row.end(), {"--reading", "row_one", "--format", "pretty"});
  const auto r = cli(row);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reading row_one: match"), std::string::npos);
}

TEST(Cli, AtlasProgressGoesToErr) {
  const auto r = cli({"atlas", "--family", "square", "--p", "3", "--n", "2", "--progress", "--workers", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("progress 7/7"), std::string::npos);
  EXPECT_EQ(r.out.find("progress"), std::string::npos);
}

TEST(Cli, Verify) {
  const auto sq = cli({"verify", "square-bound", "--p", "5", "--n", "2"});
  EXPECT_EQ(sq.code, 0) << sq.err;
  EXPECT_EQ(std::count(sq.out.begin(), sq.out.end(), '\n'), 23);
  EXPECT_EQ(nlohmann::json::parse(sq.out.substr(0, sq.out.find('\n')))["theorem"], "square_bound");

  // n = 4 has two c with c^2 + c + 1 = 0 where the equivalence breaks
  const auto bin = cli({"verify", "inverse-binary", "--p", "2", "--n", "4", "--c", "all", "--format", "pretty"});
  EXPECT_EQ(bin.code, 1);
  EXPECT_EQ(std::count(bin.out.begin(), bin.out.end(), '\n'), 14);
  EXPECT_EQ(cli({"verify", "inverse-binary", "--p", "2", "--n", "5", "--modulus", "1,0,1,0,0,1"}).code, 0);
  EXPECT_EQ(cli({"verify", "quadratic-census", "--p", "3", "--n", "3"}).code, 0);
  EXPECT_EQ(cli({"verify", "parseval", "--p", "3", "--n", "2", "--func", "x^5 + x"}).code, 0);
  EXPECT_EQ(cli({"verify", "monomial-shift", "--p", "3", "--n", "3", "--d", "4"}).code, 0);
  EXPECT_EQ(cli({"verify", "mu-c", "--p", "3", "--n", "2", "--k", "1", "--mu-form", "corrected"}).code, 0);
  EXPECT_EQ(cli({"verify", "mu-c", "--p", "3", "--n", "2", "--k", "1"}).code, 1);
}

TEST(Cli, Walsh) {
  const auto r = cli({"walsh", "--p", "2", "--n", "2", "--family", "inverse"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["walsh"]["entries"].size(), 4u);
  EXPECT_EQ(j["pivots"].size(), 6u);
  for (const auto& u : j["one_uniform"]) EXPECT_EQ(u["sum"], "256");
  EXPECT_EQ(j["characterization"].size(), 2u);
  // p = 3, n = 2 inverse: the one-uniform sum is below p^{4n} on some c
  EXPECT_EQ(cli({"walsh", "--p", "3", "--n", "2", "--family", "inverse", "--no-table"}).code, 1);
}

TEST(Cli, SlowTierGate) {
  expect_usage_error({"atlas", "--family", "dob", "--u", "1", "--p", "3", "--n", "5"});
  expect_usage_error({"bct", "--p", "3", "--n", "5", "--family", "inverse", "--oracle"});
}

TEST(Cli, UsageErrors) {
  expect_usage_error({});
  expect_usage_error({"frobnicate"});
  expect_usage_error({"bct", "--p", "3", "--n", "2", "--func", "x^2", "--c", "0"});
  expect_usage_error({"bct", "--p", "4", "--n", "2", "--func", "x^2"});
  expect_usage_error({"bct", "--p", "2", "--n", "6", "--func", "x^2"});
  expect_usage_error({"bct", "--p", "3", "--n", "2", "--func", "x^^2"});
  expect_usage_error({"bct", "--p", "3", "--n", "2"});
  expect_usage_error({"bct", "--p", "3", "--n", "2", "--func", "x^2", "--c", "b + 1"});
  expect_usage_error({"bct", "--p", "3", "--n", "2", "--func", "x^2", "--format", "xml"});
  expect_usage_error({"verify", "square-bound", "--p", "3", "--n", "2", "--c", "1"});
  expect_usage_error({"verify", "nonsense", "--p", "3", "--n", "2"});
  expect_usage_error({"verify", "gold-bound", "--p", "3", "--n", "2"});
  expect_usage_error({"atlas", "--family", "gold", "--p", "3", "--n", "2"});
  expect_usage_error({"atlas", "--family", "inverse", "--p", "5", "--n", "2", "--expect", "paper"});
  expect_usage_error({"atlas", "--family", "inverse", "--p", "3", "--n", "2", "--reading", "diagonal"});
  expect_usage_error({"atlas", "--family", "dob", "--u", "1", "--p", "5", "--n", "2"});
  expect_usage_error({"walsh", "--p", "3", "--n", "4", "--family", "inverse", "--j-max", "2"});
}

TEST(Cli, Help) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("atlas"), std::string::npos);
}
