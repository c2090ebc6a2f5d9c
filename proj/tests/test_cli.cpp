#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace semilat::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, std::optional<std::string> env_cap = std::nullopt) {
  std::ostringstream out;
  std::ostringstream err;
  int status = main_entry(args, std::move(env_cap), out, err);
  return {status, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("semilat_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Cli, EtText) {
  auto r = call({"et", "--n", "3", "--t", "0", "--format", "text"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "n=3 t=0 size=4\n0 0 0\n0 0 2\n0 1 0\n0 1 2\n");
}

TEST(Cli, EtOutputRoundTripsThroughVerifyAndMaximal) {
  auto et = call({"et", "--n", "4", "--t", "2"});
  TempFile f(et.out);
  auto v = call({"verify", "--in", f.path()});
  EXPECT_EQ(v.status, kExitOk);
  EXPECT_EQ(v.out, "valid: n=4 size=8\n");
  auto m = call({"maximal", "--in", f.path()});
  EXPECT_EQ(m.status, kExitOk);
  EXPECT_EQ(m.out, "maximal: true\n");
}

TEST(Cli, VerifyReportsViolation) {
  TempFile f("0 0 0\n1 1 1\n");
  auto r = call({"verify", "--in", f.path()});
  EXPECT_EQ(r.status, kExitFail);
  EXPECT_NE(r.out.find("invalid: commutativity fails"), std::string::npos);
  EXPECT_NE(r.out.find("a = 0 0 0"), std::string::npos);
  EXPECT_NE(r.out.find("b = 1 1 1"), std::string::npos);

  auto j = call({"verify", "--in", f.path(), "--format", "json"});
  EXPECT_EQ(j.status, kExitFail);
  EXPECT_NE(j.out.find("\"axiom\": \"commutativity\""), std::string::npos);
}

TEST(Cli, MaximalGivesWitness) {
  TempFile f("0 1\n");
  auto r = call({"maximal", "--in", f.path()});
  EXPECT_EQ(r.status, kExitFail);
  EXPECT_EQ(r.out, "maximal: false\nwitness: 0 0\n");
}

TEST(Cli, MalformedInputReportsLine) {
  TempFile f("# header\n0 0 2\n0 9 2\n");
  auto r = call({"verify", "--in", f.path()});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  auto missing = call({"verify", "--in", "/nonexistent/semilat/file"});
  EXPECT_EQ(missing.status, kExitUsage);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);
}

TEST(Cli, ReduceTextAndJson) {
  TempFile f("0 0 0\n0 0 2\n0 1 0\n0 1 2\n");
  auto r = call({"reduce", "--in", f.path()});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "anchor t=0 u=1\nsizes S=4 S_star=2 S_star_u=2\n"
            "star:\nn=3 size=2\n0 0 0\n0 0 2\n"
            "restricted:\nn=2 size=2\n0 0\n0 1\n");
  auto j = call({"reduce", "--in", f.path(), "--format", "json"});
  EXPECT_NE(j.out.find("\"S_star_u\": 2"), std::string::npos);
  auto forced = call({"reduce", "--in", f.path(), "--t", "0", "--u", "2"});
  EXPECT_EQ(forced.status, kExitOk);
  EXPECT_NE(forced.out.find("anchor t=0 u=2"), std::string::npos);
  auto bad = call({"reduce", "--in", f.path(), "--t", "1", "--u", "2"});
  EXPECT_EQ(bad.status, kExitUsage);
}

TEST(Cli, OrderNaturalAndTransitivity) {
  TempFile f("0 0\n0 1\n");
  auto nat = call({"order", "--in", f.path()});
  EXPECT_EQ(nat.status, kExitOk);
  EXPECT_EQ(nat.out, "natural order on 2 elements\n0: 0 0\n1: 0 1\nleq:\n1 1\n0 1\n");
  auto tr = call({"order", "--in", f.path(), "--transitivity"});
  EXPECT_EQ(tr.out, "transitivity order on 2 points\n0: 0\n1: 1\nleq:\n1 1\n0 1\n");
}

TEST(Cli, IdempotentsAndEnumerate) {
  auto i = call({"idempotents", "--n", "2"});
  EXPECT_EQ(i.out, "n=2 count=3\n0 0\n0 1\n1 1\n");
  auto e = call({"enumerate", "--n", "2"});
  EXPECT_EQ(e.out, "n=2 maximal=2\n\nn=2 size=2\n0 0\n0 1\n\nn=2 size=2\n0 1\n1 1\n");
}

TEST(Cli, SpectrumFormats) {
  auto csv = call({"spectrum", "--n", "2", "--format", "csv"});
  EXPECT_EQ(csv.out, "n,size,count\n2,2,2\n");
  auto text = call({"spectrum", "--n", "2"});
  EXPECT_EQ(text.out, "n=2 total_maximal=2 max_size=2\nsize count\n2 2\n");
  auto a = call({"spectrum", "--n", "4", "--format", "json"});
  auto b = call({"spectrum", "--n", "4", "--format", "json", "--workers", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, MakeSize) {
  auto r = call({"make-size", "--n", "3", "--t", "0", "--m", "3"});
  EXPECT_EQ(r.out, "n=3 t=0 size=3\n0 0 0\n0 0 2\n0 1 0\n");
  EXPECT_EQ(call({"make-size", "--n", "3", "--t", "0", "--m", "5"}).status, kExitUsage);
}

TEST(Cli, VerifyTheorem) {
  auto r = call({"verify-theorem", "--n", "2"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("PASS: max size 2 = 2^1\n"), std::string::npos);
  EXPECT_NE(r.out.find("PASS: count 2 = n\n"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  auto four = call({"verify-theorem", "--n", "4", "--format", "json"});
  EXPECT_EQ(four.status, kExitOk);
  EXPECT_NE(four.out.find("\"pass\": true"), std::string::npos);
}

TEST(Cli, CapEnforcement) {
  auto r = call({"spectrum", "--n", "7"});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("cap of 5"), std::string::npos);
  auto six = call({"spectrum", "--n", "6"});
  EXPECT_EQ(six.status, kExitUsage);
  auto too_high = call({"spectrum", "--n", "3", "--cap", "7"});
  EXPECT_EQ(too_high.status, kExitUsage);
  auto env_high = call({"spectrum", "--n", "3"}, "9");
  EXPECT_EQ(env_high.status, kExitUsage);
  auto env_low = call({"spectrum", "--n", "4"}, "3");
  EXPECT_EQ(env_low.status, kExitUsage);
  EXPECT_NE(env_low.err.find("cap of 3"), std::string::npos);
  auto env_bad = call({"spectrum", "--n", "3"}, "many");
  EXPECT_EQ(env_bad.status, kExitUsage);
  auto flag_wins = call({"spectrum", "--n", "4", "--cap", "4"}, "3");
  EXPECT_EQ(flag_wins.status, kExitOk);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).status, kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(call({"et", "--n", "3"}).status, kExitUsage);
  EXPECT_EQ(call({"et", "--n", "3", "--t", "3"}).status, kExitUsage);
  EXPECT_EQ(call({"et", "--n", "0", "--t", "0"}).status, kExitUsage);
  EXPECT_EQ(call({"et", "--n", "3", "--t", "0", "--format", "csv"}).status, kExitUsage);
  EXPECT_EQ(call({"enumerate", "--n", "3", "--workers", "0"}).status, kExitUsage);
  EXPECT_EQ(call({"--help"}).status, kExitOk);
}

TEST(Cli, WritesToOutputFile) {
  TempFile target("");
  auto r = call({"et", "--n", "2", "--t", "1", "--out", target.path()});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target.path());
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "n=2 t=1 size=2\n0 1\n1 1\n");
}

}  // namespace
}  // namespace semilat::cli
