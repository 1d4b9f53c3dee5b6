// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jacobicode/cli.hpp"
#include "jacobicode/io.hpp"

using namespace jacobicode;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "jacobicode");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, AnalyzeE2) {
  const auto r = run({"analyze", "--q", "2", "--h", "1", "--f", "x^5+x^3", "--r", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["N1"], 5);
  EXPECT_EQ(j["N2"], 5);
  EXPECT_EQ(j["n"], 13);
  EXPECT_EQ(j["k"], 9);
  EXPECT_EQ(j["d_lb"], -8);
  EXPECT_EQ(j["simple"], true);
  EXPECT_EQ(j["branch"], "Phi1");
  EXPECT_EQ(j["certified"], false);
}

TEST(Cli, AnalyzeFromCurveJson) {
  const auto r = run({"analyze", "--curve", R"({"field":{"q":2},"h":[1],"f":[0,0,0,0,0,1]})", "--r", "3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["simple"], false);
}

TEST(Cli, AnalyzeCsvAndText) {
  const auto csv = run({"analyze", "--q", "2", "--h", "1", "--f", "x^5+x^3", "--format", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out.rfind(csv_header() + "\n", 0), 0u);
  const auto text = run({"analyze", "--q", "2", "--h", "1", "--f", "x^5+x^3", "--format", "text"});
  ASSERT_EQ(text.code, 0) << text.err;
  EXPECT_NE(text.out.find("13"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  // Singular model.
  auto r = run({"analyze", "--q", "2", "--h", "0", "--f", "x^5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  // r below 3 without the override.
  EXPECT_EQ(run({"analyze", "--q", "2", "--h", "1", "--f", "x^5+x^3", "--r", "2"}).code, 1);
  EXPECT_EQ(run({"analyze", "--q", "2", "--h", "1", "--f", "x^5+x^3", "--r", "2", "--allow-small-r"}).code, 0);
  EXPECT_EQ(run({"bound", "--q", "2", "--tau", "-3"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"search", "--q", "16"}).code, 1);  // exhaustive space too large
  EXPECT_EQ(run({"search", "--q", "2", "--exhaustive", "--random"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Bound) {
  const auto r = run({"bound", "--q", "2", "--tau", "2", "--pi", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "7\n");
  const auto j = run({"bound", "--q", "16", "--tau", "0", "--pi", "2", "--format", "json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(json::parse(j.out)["bound"], 17);
}

TEST(Cli, JacobianVerifyOrder) {
  const auto r = run({"jacobian", "--q", "2", "--h", "1", "--f", "x^5", "--verify-order", "--enumerate"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["order"], 5);
  EXPECT_EQ(j["enumerated_order"], 5);
  EXPECT_EQ(j["theta_size"], 3);
  EXPECT_EQ(j["order_verified"], true);
  EXPECT_EQ(j["elements"].size(), 5u);
}

TEST(Cli, Attain) {
  const auto r = run({"attain", "--q", "2", "--h", "1", "--f", "x^5+x^3", "--r", "3", "--tuples", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["experiments"].size(), 5u);
  EXPECT_EQ(j["experiments"][0]["support_count"], 5);
}

TEST(Cli, SearchIsIndependentOfThreadCount) {
  const auto a = run({"search", "--q", "3", "--r", "3,4", "--threads", "1", "--top", "0"});
  const auto b = run({"search", "--q", "3", "--r", "3,4", "--threads", "8", "--top", "0"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto c = run({"search", "--q", "16", "--random", "--trials", "500", "--seed", "9", "--threads", "1"});
  const auto d = run({"search", "--q", "16", "--random", "--trials", "500", "--seed", "9", "--threads", "8"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out, d.out);
  const auto j = json::parse(c.out);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_LE(j["rows"].size(), 20u);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "jacobicode_cli_test.csv";
  std::filesystem::remove(path);
  const auto r = run({"search", "--q", "2", "--format", "csv", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, csv_header());
  std::filesystem::remove(path);
}

}  // namespace
