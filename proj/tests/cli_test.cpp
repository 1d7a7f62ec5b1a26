// Copyright 2026 The klogic Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kl/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cut_corpus.hpp"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace kl::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempFile(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("klc_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Decide, Derivable) {
  const Outcome r = Call({"decide", "--logic", "kl", "1 | a . a? |- a?"});
  EXPECT_EQ(r.code, kExitPositive);
  EXPECT_EQ(r.out, "derivable\n");
  EXPECT_EQ(r.err, "");
}

TEST(Decide, NotDerivable) {
  const Outcome r = Call({"decide", "--logic", "kl+", "|- a?"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_EQ(r.out, "not derivable (counterexample: \xCE\xB5)\n");
}

TEST(Decide, MissingLogicFallsBackWithNote) {
  const Outcome r = Call({"decide", "a? |- a"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.err.find("--logic"), std::string::npos);
}

TEST(Decide, Json) {
  const Outcome r = Call({"decide", "--logic", "kl+", "--format", "json", "a? |- a"});
  EXPECT_EQ(r.code, kExitNegative);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["logic"], "kl+");
  EXPECT_EQ(j["derivable"], false);
  EXPECT_EQ(j["counterexample"], nlohmann::json({"a", "a"}));
  const auto yes = nlohmann::json::parse(
      Call({"decide", "--logic", "kl", "--format", "json", "a |- a"}).out);
  EXPECT_TRUE(yes["counterexample"].is_null());
}

TEST(Decide, WritesDot) {
  const auto path = (std::filesystem::temp_directory_path() / "klc_test.dot").string();
  EXPECT_EQ(Call({"decide", "--logic", "kl", "--dot", path, "a |- a?"}).code, kExitPositive);
  std::ifstream in(path);
  const std::string dot((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NE(dot.find("digraph lhs"), std::string::npos);
  EXPECT_NE(dot.find("digraph rhs"), std::string::npos);
}

TEST(Decide, ParseErrorIsUsage) {
  const Outcome r = Call({"decide", "--logic", "kl", "a |- |- b"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(Decide, StateCapIsResource) {
  const Outcome r = Call({"decide", "--logic", "kl", "--state-cap", "2",
                          "(a | b)? |- (a | b)? . a . (a | b) . (a | b) . (a | b)"});
  EXPECT_EQ(r.code, kExitResource);
}

TEST(Usage, Errors) {
  EXPECT_EQ(Call({}).code, kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Call({"decide", "--logic", "lk", "a |- a"}).code, kExitUsage);
  EXPECT_EQ(Call({"decide", "--logic", "kl"}).code, kExitUsage);
  EXPECT_EQ(Call({"decide", "--logic", "kl", "--format", "xml", "a |- a"}).code, kExitUsage);
  EXPECT_EQ(Call({"decide", "--logic", "kl", "--file", "/nonexistent/x", }).code, kExitUsage);
}

TEST(Prove, TextAndJson) {
  const Outcome r = Call({"prove", "--logic", "kl", "a, b |- a . b"});
  EXPECT_EQ(r.code, kExitPositive);
  EXPECT_EQ(r.out, "a, b |- a . b   (FuseR)\n  a |- a   (Ax)\n  b |- b   (Ax)\n");
  const Outcome none = Call({"prove", "--logic", "kl+", "|- a?"});
  EXPECT_EQ(none.code, kExitNegative);
  EXPECT_EQ(none.out, "no proof\n");
  const Outcome jnone = Call({"prove", "--logic", "kl+", "--format", "json", "|- a?"});
  EXPECT_EQ(jnone.out, "null\n");
  const Outcome j = Call({"prove", "--logic", "kl", "--format", "json", "1 | a . a? |- a?"});
  EXPECT_EQ(j.code, kExitPositive);
  EXPECT_EQ(nlohmann::json::parse(j.out)["rule"], "OrL");
}

TEST(Check, ProofFromProve) {
  const Outcome j = Call({"prove", "--logic", "kl", "--format", "json", "1 | a . a? |- a?"});
  const std::string path = TempFile("proof.json", j.out);
  const Outcome r = Call({"check", "--logic", "kl", "--file", path});
  EXPECT_EQ(r.code, kExitPositive);
  EXPECT_EQ(r.out, "ok\n");
  // AxQ is not a KL+ rule.
  const Outcome plus = Call({"check", "--logic", "kl+", "--file", path});
  EXPECT_EQ(plus.code, kExitNegative);
  EXPECT_NE(plus.out.find("violation at"), std::string::npos);
}

TEST(Check, CutNeedsFlag) {
  const auto corpus = testing::CutCorpus();
  const std::string path = TempFile("cut.json", ToJson(corpus.front().proof).dump());
  const Outcome no = Call({"check", "--logic", "kl", "--format", "json", "--file", path});
  EXPECT_EQ(no.code, kExitNegative);
  const auto j = nlohmann::json::parse(no.out);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["violations"][0]["path"], "root");
  EXPECT_EQ(j["violations"][0]["rule"], "Cut");
  EXPECT_EQ(Call({"check", "--logic", "kl", "--allow-cut", "--file", path}).code,
            kExitPositive);
}

TEST(Check, MalformedDocument) {
  EXPECT_EQ(Call({"check", "--logic", "kl", "{\"rule\": 1}"}).code, kExitUsage);
  EXPECT_EQ(Call({"check", "--logic", "kl", "not json"}).code, kExitUsage);
}

TEST(Translate, Maps) {
  EXPECT_EQ(Call({"translate", "--map", "j", "a^"}).out, "a.a*\n");
  EXPECT_EQ(Call({"translate", "--map", "i", "a*"}).out, "1+a^\n");
  EXPECT_EQ(Call({"translate", "--logic", "kl", "1 | a . a?"}).out, "1+a.a*\n");
  EXPECT_EQ(Call({"translate", "--logic", "kl+", "a, b |- a?"}).out, "a.b <= a^\n");
  EXPECT_EQ(Call({"translate", "--map", "k", "a"}).code, kExitUsage);
  EXPECT_EQ(Call({"translate", "--map", "i", "a^"}).code, kExitUsage);
}

TEST(Crossval, SmallRunAgrees) {
  const Outcome r = Call({"crossval", "--logic", "kl", "--max-size", "3", "--vars", "a"});
  EXPECT_EQ(r.code, kExitPositive) << r.out;
  EXPECT_NE(r.out.find("all checks agree"), std::string::npos);
  const Outcome j = Call({"crossval", "--logic", "kl", "--max-size", "3", "--vars", "a",
                          "--format", "json", "--jobs", "2"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["disagreements"], 0);
  EXPECT_EQ(doc["sequents"], 81);
}

TEST(Crossval, BothLogicsCompareFragments) {
  const Outcome r = Call({"crossval", "--logic", "both", "--max-size", "3", "--vars", "a"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.out.find("kl+ proof => kl proof"), std::string::npos);
  EXPECT_NE(r.out.find("0? |- a\n"), std::string::npos);
}

TEST(Crossval, ReportsDisagreements) {
  const Outcome r = Call({"crossval", "--logic", "kl+", "--max-size", "5", "--vars", "a"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.out.find("DISAGREEMENTS FOUND"), std::string::npos);
  EXPECT_NE(r.out.find("0?"), std::string::npos);
}

}  // namespace
}  // namespace kl::cli
