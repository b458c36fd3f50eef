#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "psdthrottle/serialize.hpp"

namespace psdthrottle {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, ComputeJson) {
  const Result r = invoke({"compute", "--family", "cycle", "15", "--param", "th_times", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(j.dump().find("\"value\":9") != std::string::npos, true) << r.out;
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"compute", "--graph6", "IheA@GUAo", "--format", "json", "--workers", "3"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> single = args;
  single.back() = "1";
  EXPECT_EQ(invoke(single).out, a.out);
}

TEST(Cli, ReadsSeveralGraphsFromStdin) {
  const Result r = invoke({"compute", "--param", "z_plus", "--format", "json"}, "C~\nD?{\n");
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(invoke({"verify", "--graph6", "C~"}).code, cli::kOk);
  EXPECT_EQ(invoke({"table", "--family", "path", "2..8"}).code, cli::kOk);
  // Printed complement formulas disagree with the searched values.
  EXPECT_EQ(invoke({"table", "--family", "cycle_complement", "5..7"}).code, cli::kViolation);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, cli::kUsage);
  EXPECT_EQ(invoke({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"compute", "--graph6", "garbage\x01"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"compute", "--family", "cycle", "2"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"trace", "--graph6", "C~", "--set", "9"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"compute", "--graph6", "C~", "--format", "xml"}).code, cli::kUsage);
}

TEST(Cli, SizeErrors) {
  EXPECT_EQ(invoke({"compute", "--family", "cycle", "30"}).code, cli::kSize);
  EXPECT_EQ(invoke({"cops", "--family", "cycle", "10", "--k", "3", "--max-states", "50"}).code, cli::kSize);
}

TEST(Cli, TraceText) {
  const Result r = invoke({"trace", "--family", "path", "5", "--set", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("2->1 2->3"), std::string::npos) << r.out;
}

TEST(Cli, Cops) {
  const Result r = invoke({"cops", "--family", "path", "7", "--k", "1", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("3"), std::string::npos);
}

}  // namespace
}  // namespace psdthrottle
