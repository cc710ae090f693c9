#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chipgame/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = chipgame::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool single_line(const std::string& s) {
  return !s.empty() && s.find('\n') == s.size() - 1;
}

}  // namespace

TEST(Cli, ReachSummary) {
  const Result r = run({"reach", "-a", "1", "-b", "2", "-m", "3", "-n", "9"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("cells 27\n"), std::string::npos);
  EXPECT_NE(r.out.find("all_wins_alice=true\n"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ProbExactFraction) {
  const Result r = run({"prob", "-a", "1", "-b", "2", "-m", "3", "-n", "3", "--bias", "1/2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("p_alice = 1/1\n"), std::string::npos);
  EXPECT_NE(r.out.find("p_bob = 0/1\n"), std::string::npos);
  EXPECT_NE(r.out.find("p_alice ~ 1 (approximate)\n"), std::string::npos);
}

TEST(Cli, ScanThm1) {
  const Result r = run({"scan", "thm1", "--n-max", "30"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("0 counterexamples\n"), std::string::npos);
  EXPECT_NE(r.out.find("tuples_checked 4060\n"), std::string::npos);
}

TEST(Cli, WitnessAndGrid) {
  Result r = run({"witness", "-a", "1", "-b", "2", "-m", "3", "-n", "9", "-x", "0", "-y", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("moves LH\n"), std::string::npos);
  EXPECT_NE(r.out.find("path (0,0) L (1,2) H (0,3)\n"), std::string::npos);

  r = run({"grid", "-a", "1", "-b", "2", "-m", "3", "-n", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 2 3 3\nA..\n..I\n.I.\n");
}

TEST(Cli, StructuredRecordsCarrySchema) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"reach", "-a", "2", "-b", "3", "-m", "7", "-n", "7"},
        {"prob", "-a", "1", "-b", "2", "-m", "4", "-n", "8"},
        {"sim", "-a", "1", "-b", "2", "-m", "4", "-n", "8", "--trials", "100"},
        {"grid", "-a", "1", "-b", "2", "-m", "4", "-n", "8"},
        {"witness", "-a", "1", "-b", "2", "-m", "4", "-n", "8", "-x", "1", "-y", "2"},
        {"scan", "thm2", "--m-max", "6", "--n-max", "6"}}) {
    args.insert(args.begin(), {"--format", "structured"});
    const Result r = run(args);
    ASSERT_EQ(r.status, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    int records = 0;
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      EXPECT_EQ(j.at("schema"), "chipgame.v1");
      EXPECT_TRUE(j.contains("record"));
      ++records;
    }
    EXPECT_GE(records, 1);
  }
  const Result p = run({"prob", "-f", "structured", "-a", "1", "-b", "2", "-m", "3", "-n", "3"});
  const auto j = nlohmann::json::parse(p.out);
  EXPECT_EQ(j["p_alice"]["exact"], "1/1");
  EXPECT_EQ(j["bias"], "1/2");
}

TEST(Cli, IdenticalInvocationsAreByteIdentical) {
  const std::vector<std::string> sim{"sim", "-a", "1", "-b", "2", "-m", "4", "-n", "8",
                                     "--trials", "5000", "--seed", "17"};
  EXPECT_EQ(run(sim).out, run(sim).out);
  const std::vector<std::string> scan{"scan", "invariants", "--n-max", "9", "-f", "structured"};
  EXPECT_EQ(run(scan).out, run(scan).out);
  std::vector<std::string> serial = scan;
  serial.push_back("--serial");
  EXPECT_EQ(run(scan).out, run(serial).out);
}

TEST(Cli, ErrorsAreOneLineWithReasonCode) {
  struct Case {
    std::vector<std::string> args;
    int status;
    std::string prefix;
  };
  const std::vector<Case> cases = {
      {{"reach", "-a", "1", "-b", "2", "-m", "3"}, 1, "error: usage: "},
      {{"reach", "-a", "1", "-b", "2", "-m", "3", "-n", "9", "--bogus"}, 1, "error: usage: "},
      {{"frobnicate"}, 1, "error: usage: "},
      {{"reach", "-a", "2", "-b", "2", "-m", "3", "-n", "9"}, 1, "error: domain_error: "},
      {{"prob", "-a", "1", "-b", "2", "-m", "3", "-n", "9", "--bias", "0.5"}, 1, "error: domain_error: "},
      {{"prob", "-a", "1", "-b", "2", "-m", "3", "-n", "9", "--bias", "1/1"}, 1, "error: domain_error: "},
      {{"witness", "-a", "1", "-b", "2", "-m", "3", "-n", "3", "-x", "1", "-y", "1"}, 1, "error: not_found: "},
      {{"scan", "thm1", "--n-max", "2"}, 1, "error: domain_error: "},
      {{"scan", "corollary", "--biases", "1/2,3/2", "--m-max", "4", "--n-max", "4"}, 1, "error: domain_error: "},
  };
  for (const Case& c : cases) {
    const Result r = run(c.args);
    EXPECT_EQ(r.status, c.status) << c.args[0];
    EXPECT_TRUE(single_line(r.err)) << r.err;
    EXPECT_EQ(r.err.rfind(c.prefix, 0), 0u) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, ResourceBudgetExitCode) {
  ::setenv("CHIPGAME_STATE_BUDGET", "50", 1);
  const Result r = run({"reach", "-a", "1", "-b", "2", "-m", "10", "-n", "10"});
  ::unsetenv("CHIPGAME_STATE_BUDGET");
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(r.err.rfind("error: resource_error: ", 0), 0u);
  EXPECT_TRUE(single_line(r.err));
}

TEST(Cli, OutputPath) {
  const auto path = std::filesystem::temp_directory_path() / "chipgame_cli_output_test.txt";
  const Result r = run({"grid", "-a", "1", "-b", "2", "-m", "3", "-n", "3", "-o", path.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), "1 2 3 3\nA..\n..I\n.I.\n");
  std::filesystem::remove(path);

  const Result bad = run({"grid", "-a", "1", "-b", "2", "-m", "3", "-n", "3", "-o", "/nonexistent/dir/x"});
  EXPECT_EQ(bad.status, 3);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("scan"), std::string::npos);
}
