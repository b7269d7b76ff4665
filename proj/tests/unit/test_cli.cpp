#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fpr/cli/cli.hpp"
#include "fpr/profile_io.hpp"

namespace fpr::cli {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string generated(const std::string& kind, std::vector<std::string> extra = {}) {
  std::vector<std::string> args{"gen", kind};
  args.insert(args.end(), extra.begin(), extra.end());
  const Outcome r = run(args);
  EXPECT_EQ(r.code, kOk) << r.err;
  return r.out;
}

TEST(Cli, MonroeDpOnTwelveVoters) {
  const Outcome r = run({"solve-monroe", "--k", "2", "--alpha", "borda", "--agg", "max"},
                    generated("example2"));
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(result_from_json(r.out).objective, 2);
}

TEST(Cli, MonroeOracleOnTwelveVoters) {
  const Outcome r = run({"oracle", "--rule", "monroe", "--k", "2", "--agg", "sum"},
                    generated("example2"));
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(result_from_json(r.out).objective, 11);
}

TEST(Cli, SumWithoutOracleIsADomainViolation) {
  EXPECT_EQ(run({"solve-monroe", "--k", "2"}, generated("example2")).code, kDomainViolation);
  const Outcome forced = run({"solve-monroe", "--k", "2", "--oracle"}, generated("example2"));
  ASSERT_EQ(forced.code, kOk);
  EXPECT_EQ(result_from_json(forced.out).objective, 11);
}

TEST(Cli, CheckDomainOnGapTemplate) {
  const Outcome r = run({"check-domain"}, generated("example1", {"--m", "2", "--n", "2"}));
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("single-crossing: yes"), std::string::npos);
  EXPECT_NE(r.out.find("narcissistic: no"), std::string::npos);
}

TEST(Cli, SolveCcAndAutoOrder) {
  const std::string profile = generated("example2");
  const Outcome plain = run({"solve-cc", "--k", "2"}, profile);
  ASSERT_EQ(plain.code, kOk) << plain.err;
  EXPECT_EQ(result_from_json(plain.out).objective, 7);

  // Move the last vote to the front: no longer single-crossing as listed.
  std::istringstream lines(profile);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  std::string last = rows.back();
  rows.pop_back();
  rows.insert(rows.begin() + 8, last);
  std::string shuffled;
  for (const auto& row : rows) shuffled += row + "\n";

  EXPECT_EQ(run({"solve-cc", "--k", "2"}, shuffled).code, kDomainViolation);
  const Outcome fixed = run({"solve-cc", "--k", "2", "--auto-order"}, shuffled);
  ASSERT_EQ(fixed.code, kOk) << fixed.err;
  const ResultDocument doc = result_from_json(fixed.out);
  EXPECT_EQ(doc.objective, 7);
  EXPECT_TRUE(doc.voter_order.has_value());
}

TEST(Cli, WidthPartition) {
  const auto dir = std::filesystem::temp_directory_path() / "fpr_cli_test";
  std::filesystem::create_directories(dir);
  const std::string part = (dir / "part.txt").string();
  const Outcome g = run({"gen", "cloned", "--m", "3", "--n", "4", "--seed", "5",
                     "--partition-out", part});
  ASSERT_EQ(g.code, kOk);
  const Outcome width = run({"solve-cc", "--k", "2", "--width-partition", part}, g.out);
  ASSERT_EQ(width.code, kOk) << width.err;
  const Outcome oracle = run({"oracle", "--k", "2"}, g.out);
  EXPECT_EQ(result_from_json(width.out).objective, result_from_json(oracle.out).objective);
}

TEST(Cli, ReduceWritesSidecar) {
  const auto dir = std::filesystem::temp_directory_path() / "fpr_cli_test";
  std::filesystem::create_directories(dir);
  const std::string out = (dir / "red.profile").string();
  const Outcome r = run({"reduce", "--k", "1", "--out", out}, "2\n1\ta\n2\tb\n2 2\n1: 1,2\n1: 2,1\n");
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(load_profile(out).m(), 155);
  EXPECT_TRUE(std::filesystem::exists(out + ".groups.json"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"solve-cc", "--k", "2"}, "2\n1\ta\n").code, kParseError);
  EXPECT_EQ(run({"solve-cc", "--bogus"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"--help"}).code, kOk);
  EXPECT_EQ(run({"oracle", "--k", "9"}, generated("example2")).code, kUsage);
  EXPECT_EQ(run({"check-domain", "/nonexistent/profile"}).code, kParseError);
}

TEST(Cli, SizeLimitExitCode) {
  ::setenv("FPR_BUDGET", "5", 1);
  EXPECT_EQ(run({"oracle", "--rule", "monroe", "--k", "3"}, generated("example2")).code,
            kSizeLimit);
  ::unsetenv("FPR_BUDGET");
}

}  // namespace
}  // namespace fpr::cli
