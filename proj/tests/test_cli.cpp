#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "hamstar/cli.hpp"

namespace hamstar {
namespace {

using Json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, CheckEmitsVerdict) {
  const Outcome o = invoke({"check", "--t", "5", "--graph", "D?{"});
  EXPECT_EQ(o.code, 0);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["graph6"], "D?{");
  EXPECT_EQ(j["verdict"]["kind"], "hypothesis_not_met");
}

TEST(CliTest, CheckStarWitness) {
  const Outcome o = invoke({"check", "--graph", "G~zfF?"});
  ASSERT_EQ(o.code, 0);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["verdict"]["kind"], "star");
  EXPECT_EQ(j["verdict"]["witness"]["center"], 0);
  EXPECT_EQ(j["verdict"]["witness"]["leaves"], Json({3, 4, 5, 6, 7}));
}

TEST(CliTest, CheckStreamsStdin) {
  const Outcome o = invoke({"check", "--input", "-"}, "D?{\n\nG~zfF?\r\nE~~w\n");
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream lines(o.out);
  std::vector<std::string> kinds;
  for (std::string line; std::getline(lines, line);) {
    kinds.push_back(Json::parse(line)["verdict"]["kind"]);
  }
  EXPECT_EQ(kinds, (std::vector<std::string>{"hypothesis_not_met", "star", "ham_path"}));
}

TEST(CliTest, BoundaryGraphIsACounterexampleToTheNonStrictStatement) {
  EXPECT_EQ(invoke({"check", "--graph", "E]r?"}).code, 0);
  const Outcome o = invoke({"check", "--graph", "E]r?", "--no-strict"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(Json::parse(o.out)["verdict"]["failed_step"], "no-path-no-star");
}

TEST(CliTest, TextFormat) {
  const Outcome o = invoke({"check", "--graph", "G~zfF?", "--format=text"});
  EXPECT_EQ(o.out, "G~zfF? star center=0 leaves=3,4,5,6,7\n");
}

TEST(CliTest, ExtractEmitsTrace) {
  const Outcome o = invoke({"extract", "--t", "5", "--graph", "G~zfF?"});
  ASSERT_EQ(o.code, 0);
  const Json tr = Json::parse(o.out)["trace"];
  EXPECT_EQ(tr["cycle"], Json({0, 3, 1, 4, 2, 5}));
  EXPECT_EQ(tr["u"], 7);
  EXPECT_EQ(tr["v"], 6);
  EXPECT_EQ(tr["I"], Json({1, 3, 5}));
  EXPECT_EQ(tr["l"], 1);
  EXPECT_EQ(tr["j_indices"], Json({3}));
  EXPECT_EQ(tr["witness"]["leaves"], Json({3, 4, 5, 6, 7}));

  const Json none = Json::parse(invoke({"extract", "--graph", "E]r?"}).out);
  EXPECT_TRUE(none["trace"].is_null());
}

TEST(CliTest, GenFamily) {
  EXPECT_EQ(invoke({"gen-family", "--t", "5"}).out, "E]r?\n");
  const Outcome h = invoke({"gen-family", "--t", "5", "--h-graph", "A_"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, "E}r?\n");
  EXPECT_EQ(invoke({"gen-family", "--t", "4"}).code, 2);
  EXPECT_EQ(invoke({"gen-family", "--t", "5", "--h-graph", "B?"}).code, 2);
}

TEST(CliTest, SweepReport) {
  const Outcome o = invoke({"sweep", "--t", "5", "--n-max", "8", "--mode", "main"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["examined"], 12113);
  EXPECT_EQ(j["n_range"], Json({1, 8}));
  EXPECT_TRUE(j["counterexamples"].empty());
  for (const char* key : {"hypothesis_not_met", "ham_path", "star", "regime_skipped"}) {
    EXPECT_TRUE(j["histogram"].contains(key)) << key;
  }
  EXPECT_TRUE(j.contains("seconds"));
}

TEST(CliTest, SweepIsByteIdentical) {
  const std::vector<std::string> args{"sweep", "--n-max", "8", "--mode", "equality"};
  const Outcome a = invoke(args);
  std::vector<std::string> parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const Outcome b = invoke(parallel);
  EXPECT_EQ(a.out, invoke(args).out);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, SweepFromStream) {
  const Outcome o = invoke({"sweep", "--input", "-"}, "E]r?\nG~zfF?\n");
  ASSERT_EQ(o.code, 0);
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["examined"], 2);
  EXPECT_EQ(j["histogram"]["star"], 1);

  const Outcome empty = invoke({"sweep", "--input", "-"});
  EXPECT_EQ(Json::parse(empty.out)["examined"], 0);

  const Outcome bad = invoke({"sweep", "--input", "-"}, "E]r?\nE]r\n");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
}

TEST(CliTest, JobsFromEnvironment) {
  ::setenv("HAMSTAR_JOBS", "3", 1);
  EXPECT_EQ(invoke({"sweep", "--n-max", "6"}).code, 0);
  ::setenv("HAMSTAR_JOBS", "zero", 1);
  const Outcome bad = invoke({"sweep", "--n-max", "6"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("HAMSTAR_JOBS"), std::string::npos);
  ::unsetenv("HAMSTAR_JOBS");
}

TEST(CliTest, CodecRoundTrip) {
  const Outcome d = invoke({"codec", "--decode", "--graph", "D?{"});
  ASSERT_EQ(d.code, 0);
  const Json j = Json::parse(d.out);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["edges"], Json({{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  const Outcome e = invoke({"codec", "--encode"}, d.out);
  EXPECT_EQ(e.out, "D?{\n");
  EXPECT_EQ(invoke({"codec", "--encode"}, "{\"n\":2,\"edges\":[[0,5]]}\n").code, 2);
  EXPECT_EQ(invoke({"codec", "--encode"}, "{\"n\":2,\n").code, 2);
}

TEST(CliTest, UsageErrors) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{},
                                             {"bogus"},
                                             {"check", "--graph", "D?{", "--frobnicate"},
                                             {"check"},
                                             {"check", "--graph", "D?{", "--input", "-"},
                                             {"sweep", "--mode", "nope", "--n-max", "5"},
                                             {"sweep"},
                                             {"codec", "--graph", "D?{"},
                                             {"codec", "--encode", "--decode"},
                                             {"check", "--format", "xml", "--graph", "D?{"}}) {
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, 2);
    EXPECT_TRUE(o.out.empty());
    EXPECT_NE(o.err.find("Usage"), std::string::npos) << o.err;
  }
}

TEST(CliTest, DomainErrorsExitTwo) {
  const Outcome parse = invoke({"check", "--graph", "D?{ "});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("at byte 3"), std::string::npos) << parse.err;
  EXPECT_EQ(invoke({"check", "--graph", "C?"}).code, 2);  // disconnected
  EXPECT_EQ(invoke({"check", "--t", "4", "--graph", "D?{"}).code, 2);
  EXPECT_EQ(invoke({"sweep", "--n-max", "11"}).code, 2);
  EXPECT_EQ(invoke({"check", "--input", "/nonexistent/graphs.g6"}).code, 2);
}

TEST(CliTest, Help) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("sweep"), std::string::npos);
}

}  // namespace
}  // namespace hamstar
