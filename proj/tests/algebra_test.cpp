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

#include "kl/algebra.hpp"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "kl/oracle.hpp"
#include "kl/syntax.hpp"

namespace kl {
namespace {

KTerm KV(const char* n) { return KTerm::Var(n); }
PlusTerm PV(const char* n) { return PlusTerm::Var(n); }

TEST(Interpret, StarReading) {
  const KTerm t = Interpret<StarOp>(ParseFormula("1 | a . a?"));
  EXPECT_EQ(t, KTerm::Plus(KTerm::One(), KTerm::Dot(KV("a"), Star(KV("a")))));
  EXPECT_EQ(ToString(t), "1+a.a*");
}

TEST(Interpret, PlusReading) {
  const auto any = Interpret(ParseFormula("a?"), Logic::kKLPlus);
  ASSERT_TRUE(std::holds_alternative<PlusTerm>(any));
  EXPECT_EQ(std::get<PlusTerm>(any), Sharp(PV("a")));
  EXPECT_TRUE(std::holds_alternative<KTerm>(Interpret(ParseFormula("a?"), Logic::kKL)));
}

TEST(InterpretSequent, FoldsAntecedent) {
  const auto p = InterpretSequent<StarOp>(ParseSequent("a, b |- a . b"));
  EXPECT_EQ(p.lhs, KTerm::Dot(KV("a"), KV("b")));
  EXPECT_EQ(p.rhs, KTerm::Dot(KV("a"), KV("b")));
  const auto e = InterpretSequent<SharpOp>(ParseSequent("|- a?"));
  EXPECT_EQ(e.lhs, PlusTerm::One());
  EXPECT_EQ(e.rhs, Sharp(PV("a")));
  const auto three = InterpretSequent<StarOp>(ParseSequent("a, b, 0 |- 1"));
  EXPECT_EQ(ToString(three.lhs), "a.b.0");
  EXPECT_EQ(three.lhs, KTerm::Dot(KTerm::Dot(KV("a"), KV("b")), KTerm::Zero()));
}

TEST(Maps, StarToPlus) {
  EXPECT_EQ(MapI(Star(KV("a"))), PlusTerm::Plus(PlusTerm::One(), Sharp(PV("a"))));
  EXPECT_EQ(ToString(MapI(Star(KV("a")))), "1+a^");
  EXPECT_EQ(MapI(KTerm::Dot(KV("a"), KTerm::Zero())), PlusTerm::Dot(PV("a"), PlusTerm::Zero()));
}

TEST(Maps, PlusToStar) {
  EXPECT_EQ(MapJ(Sharp(PV("a"))), KTerm::Dot(KV("a"), Star(KV("a"))));
  EXPECT_EQ(ToString(MapJ(Sharp(PV("a")))), "a.a*");
  EXPECT_EQ(ToString(MapJ(Sharp(Sharp(PV("a"))))), "a.a*.(a.a*)*");
}

TEST(Maps, CompositionsGrowButPreserveShape) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const KTerm t = RandomTerm<StarOp>(rng, {"a", "b"}, 10);
    EXPECT_EQ(Variables(MapJ(MapI(t))), Variables(t));
    EXPECT_GE(MapJ(MapI(t)).size(), t.size());
  }
}

TEST(TermText, PrintAndParse) {
  EXPECT_EQ(ParseKTerm("1+a.a*"), KTerm::Plus(KTerm::One(), KTerm::Dot(KV("a"), Star(KV("a")))));
  EXPECT_EQ(ParseKTerm("(a+b)*"), Star(KTerm::Plus(KV("a"), KV("b"))));
  EXPECT_EQ(ParsePlusTerm("a^.b"), PlusTerm::Dot(Sharp(PV("a")), PV("b")));
  EXPECT_EQ(ToString(KTerm::Dot(KV("a"), KTerm::Plus(KV("b"), KV("c")))), "a.(b+c)");
  EXPECT_EQ(ToString(Star(KTerm::Dot(KV("a"), KV("b")))), "(a.b)*");
  EXPECT_THROW(ParseKTerm("a^"), ParseError);
  EXPECT_THROW(ParsePlusTerm("a*"), ParseError);
  EXPECT_THROW(ParseKTerm("a+"), ParseError);
  EXPECT_THROW(ParseKTerm(""), ParseError);
}

TEST(TermText, RandomRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const KTerm k = RandomTerm<StarOp>(rng, {"a", "b", "c"}, 20);
    ASSERT_EQ(ParseKTerm(ToString(k)), k) << ToString(k);
    const PlusTerm p = RandomTerm<SharpOp>(rng, {"a", "b", "c"}, 20);
    ASSERT_EQ(ParsePlusTerm(ToString(p)), p) << ToString(p);
  }
}

TEST(Interpret, PreservesStructure) {
  FormulaEnumerator formulas({"a", "b"});
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Formula& f : formulas.OfSize(n)) {
      EXPECT_EQ(Interpret<StarOp>(f).size(), f.size());
      EXPECT_EQ(Interpret<SharpOp>(f).size(), f.size());
    }
  }
}

}  // namespace
}  // namespace kl
