#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sys/wait.h>

#include "yamhall/parse.hpp"

using namespace yamhall;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(YAMHALL_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), k);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(ParseDiagram, Grammar) {
  EXPECT_EQ(parse_diagram_spec("p:3,3").size(), 6);
  EXPECT_EQ(parse_diagram_spec("c:0,0;1,1"), Diagram({{0, 0}, {1, 1}}));
  EXPECT_EQ(parse_diagram_spec(" c: 0, 0 ; 1 ,1 "), Diagram({{0, 0}, {1, 1}}));
  EXPECT_EQ(parse_diagram_spec("c:-1,2"), Diagram({{-1, 2}}));
  EXPECT_TRUE(parse_diagram_spec("c:").empty());
  EXPECT_TRUE(parse_diagram_spec("p:").empty());
}

TEST(ParseDiagram, Errors) {
  EXPECT_THROW(parse_diagram_spec("p:3,4"), InvalidInput);
  EXPECT_THROW(parse_diagram_spec("c:0,0;0,0"), InvalidInput);
  EXPECT_THROW(parse_diagram_spec("c:0"), InvalidInput);
  EXPECT_THROW(parse_diagram_spec("c:0,0;"), InvalidInput);
  EXPECT_THROW(parse_diagram_spec("3,3"), InvalidInput);
  EXPECT_THROW(parse_diagram_spec("p:3,x"), InvalidInput);
  EXPECT_THROW(parse_diagram_spec("p:2,0"), InvalidInput);
}

TEST(ParsePartition, Grammar) {
  EXPECT_EQ(parse_partition("4, 3,2"), Partition({4, 3, 2}));
  EXPECT_THROW(parse_partition("1,2"), InvalidInput);
  EXPECT_THROW(parse_partition("2,,1"), InvalidInput);
}

TEST(Cli, ExpandHallLittlewood) {
  const CliRun r = cli("expand --poly hl --diagram p:3,3 --basis schur");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["basis"], "schur");
  EXPECT_EQ(j["degree"], 6);
  for (const auto& term : j["terms"]) EXPECT_NE(term["index"], nlohmann::json({2, 2, 2}));
  EXPECT_EQ(j["terms"].size(), 4u);
}

TEST(Cli, ExpandFundamentalAndR) {
  const CliRun f = cli("expand --poly mac --basis fundamental --diagram 'c:0,0;0,1'");
  ASSERT_EQ(f.code, 0);
  EXPECT_EQ(nlohmann::json::parse(f.out)["terms"].size(), 2u);
  const CliRun r = cli("expand --poly r --diagram 'c:0,0;0,1' --descents c:0,1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["terms"][0]["index"], nlohmann::json({1, 1}));
}

TEST(Cli, WordsNoJam) {
  const CliRun r = cli("words --shape 2,2,2 --diagram p:3,3 --no-jam");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json({"321321", "323121"}));
}

TEST(Cli, RealizableAndLeading) {
  const CliRun a = cli("realizable --diagram p:2,2 --descents c:1,1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(nlohmann::json::parse(a.out)["realizable"], false);
  const CliRun b = cli(
      "leading --diagram 'c:0,3;1,3;2,3;0,2;1,2;0,1;1,1;2,1;0,0;1,0;2,0' --descents 'c:1,3;0,2;0,1;1,1'");
  ASSERT_EQ(b.code, 0);
  const auto j = nlohmann::json::parse(b.out);
  EXPECT_EQ(j["word"], "12131221111");
  EXPECT_EQ(j["content"], nlohmann::json({7, 3, 1}));
}

TEST(Cli, GraphReportAndDot) {
  const CliRun r = cli("graph --diagram p:2,2 --inv0 --report");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_FALSE(j.empty());
  for (const auto& row : j) EXPECT_TRUE(row.contains("schur"));

  const auto path = std::filesystem::temp_directory_path() / "yamhall_cli_test.dot";
  const CliRun d = cli("graph --diagram p:3,2 --dot " + path.string());
  ASSERT_EQ(d.code, 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.rfind("graph G {", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, CheckSuite) {
  const CliRun r = cli("check --suite theorem1 --max-n 6 --samples 20");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(cli("check --suite nosuch").code, 2);
}

TEST(Cli, InvalidInputExitsWithTwo) {
  EXPECT_EQ(cli("expand --poly hl --diagram p:3,4").code, 2);
  EXPECT_EQ(cli("expand --poly zz --diagram p:2").code, 2);
  EXPECT_EQ(cli("words --shape 2,2 --diagram p:3").code, 2);
  EXPECT_EQ(cli("expand --poly hl --diagram p:11").code, 2);
  EXPECT_EQ(cli("graph --diagram p:2,2 --inv0 --descents c:0,1").code, 2);
  EXPECT_EQ(cli("bogus").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, ForceLiftsTheBound) {
  EXPECT_EQ(cli("words --shape 11 --force").code, 0);
  EXPECT_EQ(cli("words --shape 11").code, 2);
}
