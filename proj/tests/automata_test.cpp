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

#include "kl/automata.hpp"

#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "kl/algebra.hpp"
#include "kl/oracle.hpp"
#include "kl/syntax.hpp"

namespace kl {
namespace {

const std::vector<std::string> kAB{"a", "b"};

KTerm KV(const char* n) { return KTerm::Var(n); }
PlusTerm PV(const char* n) { return PlusTerm::Var(n); }

std::vector<Word> AllWords(const std::vector<std::string>& alphabet, std::size_t max_len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_len) continue;
    for (const auto& c : alphabet) {
      Word w = out[i];
      w.push_back(c);
      out.push_back(std::move(w));
    }
  }
  return out;
}

// Path search over the raw transition list, independent of closures.
bool PathAccepts(const Nfa& nfa, const Word& w) {
  std::set<std::pair<int, std::size_t>> seen;
  std::function<bool(int, std::size_t)> go = [&](int s, std::size_t i) {
    if (!seen.insert({s, i}).second) return false;
    if (i == w.size() && nfa.accepting(s)) return true;
    for (const Transition& t : nfa.transitions()) {
      if (t.from != s) continue;
      if (t.label == kEpsilon && go(t.to, i)) return true;
      if (t.label != kEpsilon && i < w.size() && nfa.alphabet()[t.label] == w[i] &&
          go(t.to, i + 1)) {
        return true;
      }
    }
    return false;
  };
  return go(nfa.start(), 0);
}

bool NoZero(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kZero: return false;
    case Formula::Kind::kQuery: return NoZero(f.body());
    case Formula::Kind::kOr:
    case Formula::Kind::kFuse: return NoZero(f.left()) && NoZero(f.right());
    default: return true;
  }
}

TEST(Compile, Star) {
  const Nfa n = Compile(Star(KV("a")), {"a"});
  EXPECT_TRUE(n.Accepts({}));
  EXPECT_TRUE(n.Accepts({"a"}));
  EXPECT_TRUE(n.Accepts({"a", "a", "a"}));
}

TEST(Compile, Zero) {
  const Nfa n = Compile(KTerm::Zero(), kAB);
  for (const Word& w : AllWords(kAB, 4)) EXPECT_FALSE(n.Accepts(w));
}

TEST(Compile, SharpRejectsEmpty) {
  const Nfa n = CompilePlus(Sharp(PV("a")), {"a"});
  EXPECT_FALSE(n.Accepts({}));
  EXPECT_TRUE(n.Accepts({"a"}));
  EXPECT_TRUE(n.Accepts({"a", "a"}));
}

TEST(Compile, UnfoldingMatchesStar) {
  const KTerm unfold = KTerm::Plus(KTerm::One(), KTerm::Dot(KV("a"), Star(KV("a"))));
  EXPECT_TRUE(Equivalent(Compile(unfold, {"a"}), Compile(Star(KV("a")), {"a"})));
  EXPECT_EQ(EnumerateLanguage(unfold, 6).words, EnumerateLanguage(Star(KV("a")), 6).words);
}

TEST(Compile, UnknownVariable) {
  EXPECT_THROW(Compile(KV("c"), kAB), AlphabetMismatch);
}

TEST(Compile, AgreesWithLanguageOracle) {
  std::mt19937 rng(42);
  const auto words = AllWords(kAB, 6);
  for (int i = 0; i < 300; ++i) {
    const KTerm k = RandomTerm<StarOp>(rng, kAB, 10);
    const Nfa nk = Compile(k, kAB);
    const auto lk = EnumerateLanguage(k, 6);
    const PlusTerm p = RandomTerm<SharpOp>(rng, kAB, 10);
    const Nfa np = CompilePlus(p, kAB);
    const auto lp = EnumerateLanguage(p, 6);
    for (const Word& w : words) {
      ASSERT_EQ(nk.Accepts(w), lk.Contains(w)) << ToString(k) << " on " << WordToString(w);
      ASSERT_EQ(np.Accepts(w), lp.Contains(w)) << ToString(p) << " on " << WordToString(w);
    }
  }
}

TEST(Nfa, RejectsBadTransitions) {
  Nfa n(kAB);
  const int s = n.AddState();
  EXPECT_THROW(n.AddTransition(s, 2, s), std::exception);
  EXPECT_THROW(n.AddTransition(s, 0, 5), std::exception);
}

TEST(Determinize, AgreesWithPathSearchOnRandomNfas) {
  std::mt19937 rng(1234);
  const auto words = AllWords(kAB, 8);
  for (int trial = 0; trial < 60; ++trial) {
    Nfa n(kAB);
    const int states = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < states; ++s) n.AddState();
    n.set_start(0);
    for (int s = 0; s < states; ++s) n.set_accepting(s, rng() % 3 == 0);
    const int edges = static_cast<int>(rng() % (3 * states + 1));
    for (int e = 0; e < edges; ++e) {
      const int label = static_cast<int>(rng() % 3) - 1;
      n.AddTransition(static_cast<int>(rng() % states), label,
                      static_cast<int>(rng() % states));
    }
    const Dfa d = Determinize(n);
    for (const Word& w : words) {
      const bool expected = PathAccepts(n, w);
      ASSERT_EQ(n.Accepts(w), expected) << trial << " " << WordToString(w);
      ASSERT_EQ(d.Accepts(w), expected) << trial << " " << WordToString(w);
    }
  }
}

TEST(Determinize, StateCap) {
  const KTerm t = ParseKTerm("(a+b)*.a.(a+b).(a+b).(a+b).(a+b)");
  EXPECT_THROW(Determinize(Compile(t, kAB), AutomataOptions{8}), ResourceExhausted);
}

TEST(Includes, Examples) {
  const Nfa aa = Compile(KTerm::Dot(KV("a"), KV("a")), {"a"});
  const Nfa star = Compile(Star(KV("a")), {"a"});
  EXPECT_TRUE(Includes(aa, star).included);
  const InclusionResult r = Includes(star, aa);
  EXPECT_FALSE(r.included);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(*r.counterexample, Word{});
  EXPECT_EQ(WordToString(*r.counterexample), "\xCE\xB5");
}

TEST(Includes, AlphabetMismatch) {
  EXPECT_THROW(Includes(Compile(KV("a"), {"a"}), Compile(KV("a"), kAB)), AlphabetMismatch);
}

TEST(Includes, StateCap) {
  const Nfa hard = Compile(ParseKTerm("(a+b)*.a.(a+b).(a+b).(a+b).(a+b)"), kAB);
  const Nfa all = Compile(ParseKTerm("(a+b)*"), kAB);
  EXPECT_THROW(Includes(all, hard, AutomataOptions{4}), ResourceExhausted);
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(Equivalent(Compile(ParseKTerm("a*.a"), {"a"}), Compile(ParseKTerm("a.a*"), {"a"})));
  EXPECT_FALSE(Equivalent(Compile(ParseKTerm("a.b"), kAB), Compile(ParseKTerm("b.a"), kAB)));
  EXPECT_TRUE(Equivalent(Compile(ParseKTerm("(a+b)*"), kAB),
                         Compile(ParseKTerm("(a*.b*)*"), kAB)));
}

// Inclusion is a preorder; counterexamples are shortest witnesses.
TEST(Includes, PreorderAndWitnesses) {
  std::mt19937 rng(99);
  const auto words = AllWords(kAB, 6);
  for (int i = 0; i < 300; ++i) {
    const KTerm x = RandomTerm<StarOp>(rng, kAB, 7);
    const KTerm y = RandomTerm<StarOp>(rng, kAB, 7);
    const KTerm z = RandomTerm<StarOp>(rng, kAB, 7);
    const Nfa nx = Compile(x, kAB), ny = Compile(y, kAB), nz = Compile(z, kAB);
    EXPECT_TRUE(Includes(nx, nx).included);
    const auto xy = Includes(nx, ny);
    if (xy.included && Includes(ny, nz).included) {
      EXPECT_TRUE(Includes(nx, nz).included);
    }
    EXPECT_EQ(Equivalent(nx, ny), xy.included && Includes(ny, nx).included);
    if (xy.included) {
      EXPECT_FALSE(xy.counterexample.has_value());
      continue;
    }
    ASSERT_TRUE(xy.counterexample.has_value());
    const Word& w = *xy.counterexample;
    EXPECT_TRUE(nx.Accepts(w));
    EXPECT_FALSE(ny.Accepts(w));
    for (const Word& u : words) {
      if (u.size() >= w.size()) break;
      EXPECT_FALSE(nx.Accepts(u) && !ny.Accepts(u)) << WordToString(u);
    }
  }
}

TEST(Decide, Examples) {
  const Decision d = Decide(Logic::kKL, ParseSequent("a? |- a"));
  EXPECT_FALSE(d.derivable);
  EXPECT_EQ(d.counterexample, Word{});
  const Decision p = Decide(Logic::kKLPlus, ParseSequent("a? |- a"));
  EXPECT_FALSE(p.derivable);
  EXPECT_EQ(p.counterexample, (Word{"a", "a"}));
  EXPECT_FALSE(Decide(Logic::kKLPlus, ParseSequent("|- a?")).derivable);
  EXPECT_TRUE(Decide(Logic::kKL, ParseSequent("|- a?")).derivable);
  EXPECT_TRUE(Decide(Logic::kKL, ParseSequent("1 | a . a? |- a?")).derivable);
  EXPECT_TRUE(Decide(Logic::kKL, ParseSequent("a? |- 1 | a . a?")).derivable);
  const Decision q = Decide(Logic::kKLPlus, ParseSequent("a? |- 1 | a . a?"));
  EXPECT_FALSE(q.derivable);
  EXPECT_EQ(q.counterexample, Word{"a"});
}

TEST(Decide, Words) {
  EXPECT_EQ(WordToString({"a", "b"}), "ab");
  EXPECT_EQ(WordToString({"ab", "c"}), "ab c");
}

// On zero-free sequents a KL+ validity is KL-valid; 0? is the exception.
TEST(Decide, PlusValidityTransfersWithoutZero) {
  std::size_t checked = 0;
  ForEachSequent(kAB, 5, [&](const Sequent& s) {
    if (!NoZero(s.succedent)) return;
    for (const Formula& f : s.antecedent) {
      if (!NoZero(f)) return;
    }
    ++checked;
    if (Decide(Logic::kKLPlus, s).derivable) {
      EXPECT_TRUE(Decide(Logic::kKL, s).derivable) << ToString(s);
    }
  });
  EXPECT_GT(checked, 1000u);
  const Sequent z = ParseSequent("0? |- a");
  EXPECT_TRUE(Decide(Logic::kKLPlus, z).derivable);
  EXPECT_FALSE(Decide(Logic::kKL, z).derivable);
}

TEST(Dot, Renders) {
  const std::string dot = ToDot(Compile(Star(KV("a")), {"a"}), "star");
  EXPECT_EQ(dot.rfind("digraph star {", 0), 0u);
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
  EXPECT_NE(dot.find("label=\"a\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"\xCE\xB5\""), std::string::npos);
}

}  // namespace
}  // namespace kl
