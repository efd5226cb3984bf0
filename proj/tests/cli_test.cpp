#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI with `args` through the shell; stderr goes to a scratch file.
CliResult run(const std::string& args, const std::string& env = "") {
  const fs::path err = fs::temp_directory_path() / ("regugame_cli_err_" + std::to_string(::getpid()));
  const std::string cmd = env + " '" REGUGAME_CLI "' " + args + " 2>'" + err.string() + "'";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  fs::remove(err);
  return r;
}

const std::string kData = REGUGAME_DATA_DIR;
const std::string kBaseline = "'" + kData + "/baseline.json'";

fs::path scratch(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

TEST(Cli, DemoMarkdown) {
  const CliResult r = run("demo " + kBaseline);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "honest = 5"));
  EXPECT_TRUE(has(r.out, "| 2.6667 |"));
  EXPECT_TRUE(has(r.out, "r_bound = 14/9"));
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DemoIsByteStable) {
  EXPECT_EQ(run("demo " + kBaseline).out, run("demo " + kBaseline).out);
  EXPECT_EQ(run("demo --format csv --params " + kBaseline).out, run("demo --format csv --params " + kBaseline).out);
}

TEST(Cli, DemoJsonParses) {
  const CliResult r = run("demo --format json " + kBaseline);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "\"honest\": 5.0"));
}

TEST(Cli, FormatFromEnvironment) {
  const CliResult r = run("demo " + kBaseline, "REGUGAME_FORMAT=csv");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "# min_penalty\nr,p_min,p_min_exact\n"));
  // An explicit flag wins over the environment.
  EXPECT_TRUE(has(run("demo --format md " + kBaseline, "REGUGAME_FORMAT=csv").out, "## Minimum penalty"));
}

TEST(Cli, OutFileMatchesStdout) {
  const fs::path out = fs::temp_directory_path() / "regugame_cli_out.md";
  const CliResult r = run("demo " + kBaseline + " --out '" + out.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(out), run("demo " + kBaseline).out);
  fs::remove(out);
}

TEST(Cli, ThresholdsConsumer) {
  const CliResult r = run("thresholds --scenario consumer " + kBaseline);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "p_min = 4, m_max = 6"));
  EXPECT_TRUE(has(r.out, "verdict: FraudRisk"));
}

TEST(Cli, ThresholdsReputation) {
  const CliResult r = run("thresholds --scenario reputation " + kBaseline);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "C1 monitored honesty"));
}

TEST(Cli, Bimatrix) {
  const CliResult r = run("bimatrix '" + kData + "/supplier_retailer.json'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "no pure NE; mixed: row 0.3953, col 0.3636"));
}

TEST(Cli, SolveRawGame) {
  const CliResult r = run("solve '" + kData + "/centipede.json'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "root value: (Alice 1, Bob 0)"));
}

TEST(Cli, SolveScenario) {
  const CliResult r = run("solve --scenario consumer " + kBaseline);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "| (root) | Producer | fraud |"));
}

TEST(Cli, SweepCsv) {
  const CliResult r = run("sweep --grid 0.2:1:5 --format csv " + kBaseline);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "0.6,2.66666666667,8/3,FraudRisk,5,6.6\n"));
  EXPECT_TRUE(has(r.out, "1,0,0,Tie,5,5\n"));
}

TEST(Cli, MalformedJsonExitsTwo) {
  const fs::path bad = scratch("regugame_bad.json", "{\"price_organic\": ");
  const CliResult r = run("demo '" + bad.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(has(r.err, "not valid JSON"));
  fs::remove(bad);
}

TEST(Cli, InvalidParamsExitTwo) {
  const fs::path bad = scratch("regugame_invalid.json",
                               R"({"price_organic":12,"price_conventional":8,"cost_organic":3,"cost_conventional":7,
                                   "utility_organic":14,"utility_conventional":8,"monitor_cost":0,"penalty":0})");
  const CliResult r = run("thresholds '" + bad.string() + "'");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  fs::remove(bad);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("demo --format xml " + kBaseline).code, 2);
  EXPECT_EQ(run("demo /nonexistent/params.json").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("sweep --grid 1:0 " + kBaseline).code, 2);
}

TEST(Cli, ZeroAuditProbabilityExitsOne) {
  const fs::path p = scratch("regugame_r0.json",
                             R"({"price_organic":12,"price_conventional":8,"cost_organic":7,"cost_conventional":3,
                                 "utility_organic":14,"utility_conventional":8,"monitor_cost":0,"penalty":0,
                                 "audit_prob":0})");
  const CliResult t = run("thresholds '" + p.string() + "'");
  EXPECT_EQ(t.code, 1);
  EXPECT_TRUE(t.out.empty());
  EXPECT_FALSE(t.err.empty());
  const CliResult s = run("sweep --grid 0:1:3 " + kBaseline);
  EXPECT_EQ(s.code, 1);
  EXPECT_TRUE(s.out.empty());
  fs::remove(p);
}

}  // namespace
