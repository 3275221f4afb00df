#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(G2KIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, f)) out.append(buf, n);
  int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

nlohmann::json strip_time(nlohmann::json j) {
  j.erase("wall_time_ms");
  return j;
}

}  // namespace

TEST(Cli, OctonionSuitePasses) {
  auto r = run("--p 5 --precision 8 --suite octonion");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "g2kit-report/1");
  EXPECT_EQ(j["suite"], "octonion");
  EXPECT_EQ(j["summary"]["failed"], 0);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c["name"];
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("--suite bogus").code, 2);
  EXPECT_EQ(run("--p 4 --suite octonion").code, 2);
  EXPECT_EQ(run("--no-such-flag").code, 2);
}

TEST(Cli, TooLittlePrecisionExitsThree) {
  auto r = run("--p 5 --precision 4 --suite octonion");
  EXPECT_EQ(r.code, 3);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["summary"]["precision_exhausted"].get<int>(), 0);
}

TEST(Cli, DeterministicForAFixedSeed) {
  auto a = run("--p 7 --precision 8 --seed 11 --suite triality");
  auto b = run("--p 7 --precision 8 --seed 11 --suite triality");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(strip_time(nlohmann::json::parse(a.out)), strip_time(nlohmann::json::parse(b.out)));
}

TEST(Cli, WritesReportFile) {
  auto path = std::filesystem::temp_directory_path() / "g2kit_cli_test.json";
  std::filesystem::remove(path);
  auto r = run("--suite norms --out " + path.string());
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["config"]["p"], 5);
  EXPECT_TRUE(j["summary"].contains("exit_code"));
  std::filesystem::remove(path);
}

TEST(Cli, TextFormat) {
  auto r = run("--suite norms --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, RunsOverQuadraticExtensions) {
  EXPECT_EQ(run("--p 11 --extension unramified --suite strata").code, 0);
  EXPECT_EQ(run("--p 7 --precision 16 --extension ramified --suite norms").code, 0);
  EXPECT_EQ(run("--extension cubic --suite norms").code, 2);
}
