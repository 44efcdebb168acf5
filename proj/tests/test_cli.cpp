#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polarity/cli.hpp"
#include "polarity/error.hpp"
#include "polarity/io.hpp"

namespace polarity {
namespace {

std::string data(const std::string& name) { return (std::filesystem::path(POLARITY_TEST_DATA) / name).string(); }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, TranslateExample) {
  const Outcome r = run({"translate", "--mode", "bullet", "--asg", data("a.asg"), "p0"});
  EXPECT_EQ(r.code, kHolds);
  EXPECT_EQ(r.out, "[b] Q0\n");
  const Outcome join = run({"translate", "--mode", "bullet", "--asg", data("a.asg"), "p0 \\/ p1"});
  EXPECT_EQ(join.out, "[b] (<d> [b] Q0 | <d> [b] Q1)\n");
}

TEST(Cli, EvalModalVerdicts) {
  const Outcome r = run({"eval", "--model", data("f0.model"), "[b] Q0"});
  EXPECT_EQ(r.code, kFails);
  EXPECT_EQ(r.out,
            "{\"formula\":\"[b] Q0\",\"point\":\"a0\",\"verdict\":true}\n"
            "{\"formula\":\"[b] Q0\",\"point\":\"a1\",\"verdict\":false}\n");
  const Outcome one = run({"eval", "--model", data("f0.model"), "--point", "a0", "[b] Q0"});
  EXPECT_EQ(one.code, kHolds);
}

TEST(Cli, EvalLatticeAndFol) {
  const Outcome lat = run({"eval", "--lang", "lattice", "--model", data("f0-lattice.model"), "--point", "b0", "p0"});
  EXPECT_EQ(lat.code, kHolds);
  EXPECT_NE(lat.out.find("\"relation\":\"co-satisfies\""), std::string::npos);
  const Outcome fol = run({"eval", "--lang", "fol", "--model", data("f0.model"), "--assign", "u=a0", "exd v . I(u,v)"});
  EXPECT_EQ(fol.code, kHolds);
  EXPECT_EQ(fol.out, "{\"formula\":\"exd v . I(u, v)\",\"assignment\":\"u=a0\",\"verdict\":true}\n");
}

TEST(Cli, Extent) {
  const Outcome r = run({"extent", "--model", data("f0.model"), "[b] Q0"});
  EXPECT_EQ(r.code, kHolds);
  EXPECT_NE(r.out.find("\"extent\":[\"a0\"]"), std::string::npos);
}

TEST(Cli, BisimOutputs) {
  const Outcome empty = run({"bisim", data("m1.model"), data("m2.model")});
  EXPECT_EQ(empty.code, kHolds);
  EXPECT_EQ(empty.out, "");
  const Outcome self = run({"bisim", data("m1.model"), data("m1.model")});
  EXPECT_EQ(self.out, "a0 a0\nb0 b0\n");
  const Outcome explain = run({"bisim", "--explain", data("m1.model"), data("m2.model")});
  EXPECT_NE(explain.out.find("# a0 c0: "), std::string::npos);
}

TEST(Cli, BisimCandidatePairs) {
  const auto dir = std::filesystem::temp_directory_path() / "polarity-cli-test";
  std::filesystem::create_directories(dir);
  const auto pairs = dir / "pairs.txt";
  std::ofstream(pairs) << "a0 c0\n";
  const Outcome r = run({"bisim", "--pairs", pairs.string(), data("m1.model"), data("m2.model")});
  EXPECT_EQ(r.code, kFails);
  EXPECT_NE(r.out.find("not a bisimulation"), std::string::npos);
  std::ofstream(pairs) << "a0 a0\nb0 b0\n";
  EXPECT_EQ(run({"bisim", "--pairs", pairs.string(), data("m1.model"), data("m1.model")}).code, kHolds);
  std::filesystem::remove_all(dir);
}

TEST(Cli, StableControl) {
  const Outcome r = run({"stable", "--lang", "fol", "--model", data("control.model"), "P0(u)"});
  EXPECT_EQ(r.code, kFails);
  EXPECT_NE(r.out.find("not stable"), std::string::npos);
  EXPECT_NE(r.out.find("point: a1"), std::string::npos);
  const Outcome ok = run({"stable", "--frame", data("f0.frame"), "[b] Q0"});
  EXPECT_EQ(ok.code, kHolds);
  const Outcome catalog = run({"stable", "--catalog", "modal", "[b] (<d> [b] Q0 | <d> P0)"});
  EXPECT_EQ(catalog.code, kHolds) << catalog.out << catalog.err;
}

TEST(Cli, SttransAndCanon) {
  EXPECT_EQ(run({"sttrans", "[b] Q0"}).out, "alld v1 . I(u, v1) -> Q0(v1)\n");
  EXPECT_EQ(run({"sttrans", "--stability", "P0"}).out, "alld v . I(u, v) -> (ex1 z . I(z, v) & P0(z))\n");
  const Outcome canon = run({"canon", "--catalog", "C2", "--preset", "modal"});
  EXPECT_EQ(canon.code, kHolds);
  EXPECT_NO_THROW(read_frame(canon.out));
  EXPECT_EQ(read_frame(canon.out).size_a(), 2u);
}

TEST(Cli, Concepts) {
  const Outcome r = run({"concepts", "--frame", data("f0.frame")});
  EXPECT_EQ(r.code, kHolds);
  EXPECT_NE(r.out.find("concept 3: extent {a0 a1} intent {}"), std::string::npos);
  EXPECT_NE(r.out.find("covers: 0 1 , 0 2 , 1 3 , 2 3"), std::string::npos);
}

TEST(Cli, GeneratorsAreDeterministic) {
  const std::vector<std::string> args{"gen", "frame", "--size-a", "3", "--size-b", "2", "--seed", "9"};
  const Outcome a = run(args), b = run(args);
  EXPECT_EQ(a.code, kHolds);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(read_frame(a.out).size_a(), 3u);
  const Outcome f = run({"gen", "formula", "--lang", "modal", "--count", "4", "--seed", "2"});
  EXPECT_EQ(f.code, kHolds);
  EXPECT_EQ(std::count(f.out.begin(), f.out.end(), '\n'), 4);
}

TEST(Cli, VerifyExitCodes) {
  const Outcome pass = run({"verify", "galois", "--count", "5"});
  EXPECT_EQ(pass.code, kHolds);
  EXPECT_NE(pass.out.find("status: pass"), std::string::npos);
  EXPECT_EQ(pass.out.find("time:"), std::string::npos);
  EXPECT_NE(pass.err.find("time:"), std::string::npos);
  EXPECT_EQ(run({"verify", "nosuch"}).code, kError);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kError);
  EXPECT_EQ(run({"nosuch"}).code, kError);
  const Outcome missing = run({"eval", "--model", data("missing.model"), "P0"});
  EXPECT_EQ(missing.code, kError);
  EXPECT_NE(missing.err.find("error:"), std::string::npos);
  const Outcome parse = run({"eval", "--model", data("f0.model"), "P0 &"});
  EXPECT_EQ(parse.code, kError);
  EXPECT_NE(parse.err.find("1:5"), std::string::npos);
  EXPECT_EQ(run({"translate", "--mode", "sideways", "p0"}).code, kError);
  EXPECT_EQ(run({"eval", "--lang", "lattice", "--model", data("f0.model"), "p0"}).code, kError);
  EXPECT_EQ(run({"--help"}).code, kHolds);
}

TEST(Cli, SignatureText) {
  const Signature s = parse_signature("R 1;11 , S d;1d");
  EXPECT_EQ(s.at("R"), SortingType::parse("1;11"));
  EXPECT_EQ(s.at("S"), SortingType::parse("d;1d"));
  EXPECT_THROW(parse_signature("R"), Error);
}

}  // namespace
}  // namespace polarity
