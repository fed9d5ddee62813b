// Runs the installed-layout CLI binary and checks its observable contract.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#ifndef HILBERT_CLI_PATH
#error "HILBERT_CLI_PATH must point at the hilbert executable"
#endif

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + HILBERT_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, Series) {
  CliRun r = run("series 3 2 --terms 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "H(T) = T^2(1-T)^-3 + 2 T^2(1-T)^-2\n"
            "coefficients from degree 2: [3, 7]\n");

  r = run("series 1 1 --terms 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "H(T) = T(1-T)^-1\ncoefficients from degree 1: [1, 1]\n");

  r = run("series 1 1");
  EXPECT_EQ(r.out, "H(T) = T(1-T)^-1\n");

  EXPECT_EQ(run("series 2 3").exit_code, 2);
  EXPECT_EQ(run("series 3 2 --terms 20000").exit_code, 2);
}

TEST(Cli, SeriesJson) {
  const CliRun r = run("series 3 2 --terms 4 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["closed_form"], "T^2(1-T)^-3 + 2 T^2(1-T)^-2");
  EXPECT_EQ(j["coefficients"], nlohmann::json::array({"3", "7"}));
  EXPECT_EQ(j["terms"][0]["pole_order"], 3);
  EXPECT_EQ(j["terms"][1]["coeff"], "2");
}

TEST(Cli, Coeff) {
  CliRun r = run("coeff 3 2 3 --method all");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "formula 7\nrecurrence 7\nenumerate 7\ngenfunc 7\n"
            "all 4 routes agree: 7\n");
  EXPECT_EQ(run("coeff 4 2 2").out, "6\n");
  EXPECT_EQ(run("coeff 5 2 1").out, "0\n");
  EXPECT_EQ(run("coeff 5 2 4 --method genfunc").out, run("coeff 5 2 4").out);
  EXPECT_EQ(run("coeff 20 2 20 --method enumerate").exit_code, 2);
  EXPECT_EQ(run("coeff 3 2 3 --method magic").exit_code, 2);
}

TEST(Cli, Depth) {
  CliRun r = run("depth 5 2 --method both --json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "{\"n\":5,\"d\":2,\"hdepth\":3,\"failing_r\":4,\"failing_k\":3,"
            "\"failing_coeff\":\"-10\"}\n");

  EXPECT_EQ(lines(run("depth 7 7").out).at(0), "7");
  EXPECT_EQ(lines(run("depth 7 2").out).at(0), "3");
  EXPECT_EQ(run("depth 7 2 --method formula").out, "3\n");
  EXPECT_EQ(run("depth 7 2 --method formula --json").out,
            "{\"n\":7,\"d\":2,\"hdepth\":3,\"failing_r\":null,\"failing_k\":null,"
            "\"failing_coeff\":null}\n");
  EXPECT_EQ(run("depth 2 7").exit_code, 2);
}

TEST(Cli, Table) {
  CliRun r = run("table 3 3 --csv");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "n,d,hdepth_formula,hdepth_search,agree\n"
            "1,1,1,1,true\n2,1,1,1,true\n2,2,2,2,true\n"
            "3,1,2,2,true\n3,2,2,2,true\n3,3,3,3,true\n");

  r = run("table 1 1");
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_EQ(lines(r.out).size(), 2u);

  r = run("table 4 2 --json");
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j.size(), 7u);
  EXPECT_EQ(j.back()["n"], 4);
  EXPECT_EQ(j.back()["d"], 2);
  EXPECT_EQ(j.back()["agree"], true);

  EXPECT_EQ(run("table 3 3 --csv --json").exit_code, 2);
  EXPECT_EQ(run("table 0 3").exit_code, 2);
}

TEST(Cli, FullDepthTable) {
  const CliRun r = run("table 25 25 --csv");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 326u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_TRUE(rows[i].ends_with(",true")) << rows[i];
  }
}

TEST(Cli, Verify) {
  CliRun r = run("verify --suite all --n-max 10");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
  EXPECT_EQ(lines(r.out).size(), 7u);

  EXPECT_EQ(run("verify --suite prop33 --n-max 30").exit_code, 0);
  EXPECT_EQ(run("verify --suite tail").exit_code, 0);
  EXPECT_EQ(run("verify --suite series", "HILBERT_THREADS=3").exit_code, 0);

  EXPECT_EQ(run("verify --suite bogus").exit_code, 2);
  EXPECT_EQ(run("verify").exit_code, 2);
  EXPECT_EQ(run("verify --suite tail --n-max 0").exit_code, 2);
  EXPECT_EQ(run("verify --suite tail", "HILBERT_THREADS=zero").exit_code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("coeff 3 2").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"verify --suite all --n-max 8", "table 12 12 --json",
                           "series 9 4 --terms 30 --json", "depth 17 3 --json"}) {
    const CliRun a = run(args, "HILBERT_THREADS=1");
    const CliRun b = run(args, "HILBERT_THREADS=4");
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (const char* args : {"series 9 4 --terms 30 --json", "depth 5 2 --json",
                           "depth 6 6 --method formula --json", "table 6 3 --json"}) {
    const CliRun r = run(args);
    ASSERT_EQ(r.exit_code, 0) << args;
    const auto parsed = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(parsed.dump() + "\n", r.out) << args;
  }
}

TEST(Cli, BigIntegersAreDecimalStrings) {
  const CliRun r = run("series 60 2 --terms 80 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  const std::string last = j["coefficients"].back().get<std::string>();
  EXPECT_GT(last.size(), 20u);  // beyond 64 bits
}

}  // namespace
