#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "mgonal/escalator.hpp"

using namespace mgonal::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mgonal");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mgonal_cli_" + name);
}

}  // namespace

TEST(Cli, Usage) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"tree", "--m", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"tree", "--m", "5", "--frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"tree", "--m", "5", "--node-cap", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"guy", "--m", "6", "--ell", "5"}).code, kUsage);
  EXPECT_EQ(invoke({"density", "--gram", "1,1,x", "--p", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"density", "--gram", "1,1,1,1", "--p", "4"}).code, kUsage);
}

TEST(Cli, HelpDocumentsDefaults) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("B=100000"), std::string::npos);
  EXPECT_NE(r.out.find("depth=4"), std::string::npos);
  EXPECT_NE(r.out.find("node cap=1000000"), std::string::npos);
  EXPECT_EQ(invoke({"density", "--help"}).code, kOk);
}

TEST(Cli, Tree) {
  const auto path = temp_file("tree12.json");
  const auto r = invoke({"tree", "--m", "12", "--depth", "4", "--bound", "100000", "--out", path.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("depth4_nodes=27"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("max_internal_truant=8"), std::string::npos) << r.out;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto tree = mgonal::deserialize_tree(text.str());
  EXPECT_EQ(tree.layer(4).size(), 27u);
  std::filesystem::remove(path);

  const auto g3 = invoke({"tree", "--m", "3", "--depth", "6", "--bound", "2000"});
  EXPECT_NE(g3.out.find("gamma=8 (empirical gamma_m)"), std::string::npos) << g3.out;
  EXPECT_EQ(invoke({"tree", "--m", "5", "--depth", "10", "--node-cap", "20"}).code, kResourceCap);
}

TEST(Cli, Gamma) {
  const auto g4 = invoke({"gamma", "--m", "4", "--bound", "100000"});
  EXPECT_EQ(g4.code, kOk);
  EXPECT_NE(g4.out.find("gamma_4 = 15 (empirical gamma_m"), std::string::npos) << g4.out;
  const auto g8 = invoke({"gamma", "--m", "8", "--bound", "100000"});
  EXPECT_NE(g8.out.find("gamma_8 = 60 (empirical gamma_m"), std::string::npos) << g8.out;
  const auto g14 = invoke({"gamma", "--m", "14", "--depth-cap", "4"});
  EXPECT_EQ(g14.code, kOk);
  EXPECT_NE(g14.out.find("(lower bound"), std::string::npos) << g14.out;
  const auto value = std::stoul(g14.out.substr(g14.out.find(">= ") + 3));
  EXPECT_GE(value, 10u);
  const auto capped = invoke({"gamma", "--m", "5", "--node-cap", "30"});
  EXPECT_EQ(capped.code, kOk);
  EXPECT_NE(capped.out.find("lower bound"), std::string::npos);
}

TEST(Cli, DensityClosedForm) {
  const auto r = invoke({"density", "--gram", "1,1,1,1,1,1", "--N", "3", "--c", "1", "--p", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows[0], "p,gram,N,c,h_num,h_den,method,value_num,value_den,oracle_num,oracle_den,pass");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NE(rows[i].find(",closed_form,1,3,,,true"), std::string::npos) << rows[i];
  }
}

TEST(Cli, DensityFormulaEqualsOracle) {
  const auto r = invoke({"density", "--gram", "1,1,1,1,1,1", "--N", "1", "--c", "0", "--p", "5", "--h", "1..50"});
  ASSERT_EQ(r.code, kOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 51u);
  std::size_t checked = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].ends_with(",skipped")) continue;
    EXPECT_TRUE(rows[i].ends_with(",true")) << rows[i];
    ++checked;
  }
  EXPECT_EQ(checked, 6u);  // h in 8Z
}

TEST(Cli, DensityStrict) {
  const std::vector<std::string> base = {"density", "--gram", "1,1,1,1,1,1", "--p", "11", "--strict"};
  EXPECT_EQ(invoke(base).code, kOk);
  auto bugged = base;
  bugged.push_back("--inject-bug");
  EXPECT_EQ(invoke(bugged).code, kConformanceFailure);
  bugged.pop_back();
  bugged.pop_back();
  bugged.push_back("--inject-bug");
  EXPECT_EQ(invoke(bugged).code, kOk);
}

TEST(Cli, DensityCaseBoundsToFile) {
  const auto path = temp_file("bounds.csv");
  const auto r = invoke({"density", "--gram", "1,1,1,25,25,25", "--p", "5", "--case-bounds", "--h", "1..200", "--out",
                         path.string(), "--strict"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("failed=0"), std::string::npos) << r.out;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "p,gram,N,c,h_num,h_den,method,value_num,value_den,oracle_num,oracle_den,pass");
  std::filesystem::remove(path);
}

TEST(Cli, Guy) {
  const auto r = invoke({"guy", "--m", "10", "--ell", "5", "--bound", "5000"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("misses exactly {5}: PASS"), std::string::npos) << r.out;
  EXPECT_EQ(invoke({"guy", "--m", "6", "--ell", "2", "--bound", "2000"}).code, kOk);
  const auto grid = invoke({"guy", "--grid", "9", "--bound", "500"});
  EXPECT_EQ(grid.code, kOk);
  EXPECT_EQ(lines(grid.out).size(), 1u + 2 + 3 + 4 + 5);
}

TEST(Cli, Tau) {
  const auto r = invoke({"tau", "--p", "2", "--t", "3", "--N", "2", "--c", "1", "--strict"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("lemma value 0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(invoke({"tau", "--p", "3", "--N", "3", "--c", "3"}).code, kUsage);
}
