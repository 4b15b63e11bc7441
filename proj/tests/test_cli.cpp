#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "lapspread/report.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LAPSPREAD_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, AnalyzeFamily) {
  const auto r = run("analyze --family X8");
  ASSERT_EQ(r.code, 0);
  const auto j = lapspread::Json::parse(r.out);
  EXPECT_NEAR(j["spectrum"]["values"][0].get<double>(), (7 + std::sqrt(17.0)) / 2, 1e-11);
}

TEST(Cli, AnalyzeGraph6) {
  const auto r = run("analyze --graph6 'D?{'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lapspread::Json::parse(r.out)["graph"]["order"], 5);
}

TEST(Cli, AnalyzeEdgeFile) {
  const std::string path = testing::TempDir() + "p3_edges.txt";
  std::ofstream(path) << "3\n0 1\n1 2\n";
  const auto r = run("analyze --edges " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(lapspread::Json::parse(r.out)["spectrum"]["values"][0].get<double>(), 3.0, 1e-11);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("analyze --graph6 'C'").code, 2);
  EXPECT_EQ(run("analyze --family nonsense").code, 2);
  EXPECT_EQ(run("analyze --edges /nonexistent/file").code, 2);
  EXPECT_EQ(run("analyze --family KnC:3,3 --graph6 'A_'").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("analyze --graph6 'C?'").code, 3);
  EXPECT_EQ(run("analyze --graph6 'C?' --allow-disconnected").code, 0);
  EXPECT_EQ(run("table1 --a 5 --b 3").code, 2);
  EXPECT_EQ(run("partitions --n 6..40").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Table1Csv) {
  const auto r = run("table1 --csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Y8,GQ~vvg,8,8,8,4,4,4"), std::string::npos);
  const auto k37 = run("table1 --a 3 --b 7");
  const auto j = lapspread::Json::parse(k37.out);
  EXPECT_NEAR(j[6]["computed"]["alpha1"].get<double>(), (17 + std::sqrt(57.0)) / 2, 1e-10);
  const auto f2 = lapspread::Json::parse(run("table1 --t 2").out);
  EXPECT_NEAR(f2[7]["computed"]["alpha1"].get<double>(), 4 + std::sqrt(3.0), 1e-10);
}

TEST(Cli, SweepAndPartitions) {
  const auto a = run("sweep --n 4..8 --samples 30 --seed 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run("sweep --n 4..8 --samples 30 --seed 3 --threads 1").out);
  EXPECT_TRUE(lapspread::Json::parse(a.out)["violations"].empty());
  EXPECT_EQ(run("sweep --samples 10 --p 0.4,0.7").code, 0);
  EXPECT_EQ(run("sweep --samples 10 --p 0.4,1.5").code, 2);
  const auto p = run("partitions --n 6..9");
  ASSERT_EQ(p.code, 0);
  EXPECT_TRUE(lapspread::Json::parse(p.out)["passed"].get<bool>());
}

TEST(Cli, SweepFromGraph6Stream) {
  const auto r = run("--help > /dev/null; printf 'Dhc\\nGQ~vvg\\n' | " + std::string(LAPSPREAD_CLI_PATH) +
                     " sweep --stdin-graph6");
  ASSERT_EQ(r.code, 0);
  const auto j = lapspread::Json::parse(r.out);
  EXPECT_EQ(j["graphs_tested"], 2);
  EXPECT_EQ(j["verdicts"].size(), 2u);
}

TEST(Cli, FamilyEmitsGraph6) {
  const auto r = run("family KnC:4,4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "GQ~vvg\n");
}
