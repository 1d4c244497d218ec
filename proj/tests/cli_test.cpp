#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "latpoly/cli.hpp"

namespace latpoly {
namespace {

const std::string kSamples = LATPOLY_SAMPLES_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return kSamples + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("latpoly_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Check, NegativeControl) {
  const auto r = run({"check", "--lattice", sample("chain3.lat"), "--arity", "1", "--table", sample("step.tbl")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out,
            "order-preserving: PASS\n"
            "ii: FAIL at x=(m) k=1\n"
            "iii: FAIL at x=(1) c=m eq=convex-range\n"
            "iv: FAIL at x=(1) c=m eq=(3)\n"
            "v: FAIL at x=(1) c=m eq=(3)\n"
            "vi: FAIL at x=(m) c=m eq=(5)\n"
            "polynomial: FAIL at x=(m)\n"
            "consistent: yes\n");
}

TEST(Check, ConditionSubset) {
  const auto r = run({"check", "--lattice", sample("chain3.lat"), "--arity", "1", "--table", sample("step.tbl"),
                      "--conditions", "ii,iv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("ii: FAIL at x=(m) k=1\niv: FAIL at x=(1) c=m eq=(3)\n"), std::string::npos);
  EXPECT_EQ(r.out.find("iii:"), std::string::npos);
  EXPECT_EQ(r.out.find("vi:"), std::string::npos);
}

TEST(Check, PolynomialPassesEverything) {
  const auto r = run({"check", "--lattice", "builtin:chain:3", "--arity", "2", "--term", "med(x1,'m',x2)"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("consistent: yes"), std::string::npos);
}

TEST(Check, PentagonIsInconsistent) {
  const auto r = run({"check", "--lattice", sample("n5.lat"), "--arity", "1", "--term", "(x1|'a')&'b'"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("iv: FAIL at x=(c) c=b eq=(3)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("consistent: no"), std::string::npos);
}

TEST(Check, ExitZeroIffNoFailLine) {
  for (const auto* term : {"x1", "x1 & 'a'", "x1 | x2", "'b'"}) {
    const auto r = run({"check", "--lattice", "builtin:boolean:2", "--arity", "2", "--term", term});
    EXPECT_EQ(r.code == 0, r.out.find("FAIL") == std::string::npos) << term;
  }
}

TEST(Equiv, DistributiveLaw) {
  const auto r = run({"equiv", "--lattice", sample("chain2.lat"), "--arity", "3", "--term", "x1 & (x2 | x3)",
                      "--term", "x1 & x2 | x1 & x3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equiv: PASS domain=characteristic\n");
}

TEST(Equiv, Different) {
  const auto r = run({"equiv", "--lattice", "builtin:chain:2", "--arity", "2", "--term", "x1", "--term", "x2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "equiv: FAIL at x=(1,0) domain=characteristic\n");
}

TEST(Equiv, NeedsTwoTerms) {
  const auto r = run({"equiv", "--lattice", "builtin:chain:2", "--arity", "2", "--term", "x1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Normalize, Median) {
  const auto r = run({"normalize", "--lattice", sample("chain3.lat"), "--arity", "2", "--term", "med(x1,'m',x2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{} -> 0\n{1} -> m\n{2} -> m\n{1,2} -> 1\n"
            "term: x1 & x2 | x1 & 'm' | x2 & 'm'\n");
}

TEST(Normalize, NonPolynomialTable) {
  const auto r = run({"normalize", "--lattice", sample("chain3.lat"), "--arity", "1", "--table", sample("step.tbl")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("normal-form: FAIL"), std::string::npos);
}

TEST(DnfCount, JoinWithAtom) {
  const auto r = run({"dnf-count", "--lattice", sample("b2.lat"), "--arity", "1", "--term", "x1 | 'a'", "--list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "count=2\n# member 1\n{} -> a\n{1} -> b\n# member 2\n{} -> a\n{1} -> 1\n");
  const auto plain = run({"dnf-count", "--lattice", sample("b2.lat"), "--arity", "1", "--term", "x1 | 'a'"});
  EXPECT_EQ(plain.out, "count=2\n");
}

TEST(DnfCount, LimitReached) {
  const auto r = run({"dnf-count", "--lattice", "builtin:chain:4", "--arity", "3", "--term", "'m2'", "--limit", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("(limit reached)"), std::string::npos) << r.out;
}

TEST(Verify, ChainThree) {
  const auto r = run({"verify", "--lattice", "builtin:chain:3", "--arity", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "verify lattice=chain3 n=1 mode=exhaustive\nchecked=10 polynomial=6 inconsistent=0\n");
}

TEST(Verify, RejectsNonDistributive) {
  const auto r = run({"verify", "--lattice", "builtin:M3", "--arity", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Witness, Pentagon) {
  const auto r = run({"witness", "--lattice", sample("n5.lat"), "--arity", "1", "--condition", "iv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("direction=polynomial-violates"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("evidence: x=(1) c=b eq=(3)"), std::string::npos) << r.out;
}

TEST(Errors, MissingTablePoint) {
  const auto path = write_temp("missing.tbl", "table 1\n0 -> 0\n1 -> 1\n");
  const auto r = run({"check", "--lattice", sample("chain3.lat"), "--arity", "1", "--table", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing point"), std::string::npos) << r.err;
}

TEST(Errors, UnknownElement) {
  const auto r = run({"check", "--lattice", sample("chain3.lat"), "--arity", "1", "--term", "x1 & 'q'"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("q"), std::string::npos);
}

TEST(Errors, MissingLatticeFile) {
  const auto r = run({"check", "--lattice", "/nonexistent.lat", "--arity", "1", "--term", "x1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Errors, ArityMismatch) {
  const auto r = run({"check", "--lattice", sample("chain3.lat"), "--arity", "2", "--table", sample("step.tbl")});
  EXPECT_EQ(r.code, 2);
}

TEST(Errors, Budget) {
  const auto r =
      run({"check", "--lattice", "builtin:chain:4", "--arity", "3", "--term", "x1 & x2 | x3", "--budget", "5"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Errors, Usage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "--arity", "1", "--term", "x1"}).code, 2);
  EXPECT_EQ(run({"check", "--lattice", "builtin:chain:2", "--arity", "1"}).code, 2);
  EXPECT_EQ(run({"check", "--lattice", "builtin:chain:2", "--arity", "1", "--term", "x1", "--conditions", "vii"}).code,
            2);
}

TEST(Errors, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dnf-count"), std::string::npos);
}

TEST(Determinism, RepeatedRunsAreIdentical) {
  const std::vector<std::vector<std::string>> invocations{
      {"check", "--lattice", sample("n5.lat"), "--arity", "1", "--term", "(x1|'a')&'b'"},
      {"verify", "--lattice", "builtin:chain:5", "--arity", "2", "--samples", "20", "--seed", "4"},
      {"witness", "--lattice", "builtin:M3", "--arity", "1", "--condition", "vi"},
  };
  for (const auto& args : invocations) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace latpoly
