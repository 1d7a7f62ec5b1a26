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

// Finite automata over the variable alphabet: Thompson compilation of star-
// and plus-terms, determinization, and language inclusion with shortest
// counterexamples. Inclusion is the semantic decision procedure for both
// logics.

#ifndef KL_AUTOMATA_HPP_
#define KL_AUTOMATA_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kl/algebra.hpp"
#include "kl/calculus.hpp"
#include "kl/error.hpp"
#include "kl/syntax.hpp"

namespace kl {

// A word is a sequence of letters; letters are variable names.
using Word = std::vector<std::string>;

inline std::string WordToString(const Word& w) {
  if (w.empty()) return "\xCE\xB5";  // ε
  bool single = std::all_of(w.begin(), w.end(),
                            [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !single) out += ' ';
    out += w[i];
  }
  return out;
}

inline constexpr int kEpsilon = -1;

struct Transition {
  int from;
  int label;  // index into the alphabet, or kEpsilon
  int to;
};

// States are 0..num_states()-1. The alphabet is sorted and duplicate-free.
class Nfa {
 public:
  explicit Nfa(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                    alphabet_.end());
  }

  int AddState() {
    out_.emplace_back();
    accepting_.push_back(false);
    return static_cast<int>(out_.size()) - 1;
  }

  void AddTransition(int from, int label, int to) {
    CheckState(from);
    CheckState(to);
    if (label != kEpsilon &&
        (label < 0 || label >= static_cast<int>(alphabet_.size()))) {
      throw AlphabetMismatch("transition label outside the alphabet");
    }
    out_[from].push_back({from, label, to});
  }

  void set_start(int s) {
    CheckState(s);
    start_ = s;
  }
  void set_accepting(int s, bool accepting = true) {
    CheckState(s);
    accepting_[s] = accepting;
  }

  int num_states() const { return static_cast<int>(out_.size()); }
  int start() const { return start_; }
  bool accepting(int s) const { return accepting_[s]; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Transition>& out(int s) const { return out_[s]; }

  std::vector<Transition> transitions() const {
    std::vector<Transition> all;
    for (const auto& edges : out_) all.insert(all.end(), edges.begin(), edges.end());
    return all;
  }

  // Index of `letter`, or -1.
  int LetterIndex(const std::string& letter) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), letter);
    if (it == alphabet_.end() || *it != letter) return -1;
    return static_cast<int>(it - alphabet_.begin());
  }

  // Sorted epsilon-closure of every state.
  std::vector<std::vector<int>> EpsilonClosures() const {
    std::vector<std::vector<int>> closures(out_.size());
    std::vector<int> mark(out_.size(), -1);
    for (int s = 0; s < num_states(); ++s) {
      std::vector<int> stack{s};
      mark[s] = s;
      auto& c = closures[s];
      while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        c.push_back(q);
        for (const Transition& t : out_[q]) {
          if (t.label == kEpsilon && mark[t.to] != s) {
            mark[t.to] = s;
            stack.push_back(t.to);
          }
        }
      }
      std::sort(c.begin(), c.end());
    }
    return closures;
  }

  bool Accepts(const Word& word) const {
    const auto closures = EpsilonClosures();
    std::vector<int> current = closures[start_];
    for (const std::string& letter : word) {
      const int c = LetterIndex(letter);
      if (c < 0) return false;
      current = Step(current, c, closures);
      if (current.empty()) return false;
    }
    return std::any_of(current.begin(), current.end(),
                       [&](int q) { return accepting_[q]; });
  }

  // Closed successor set of a closed set `states` on letter `c`.
  std::vector<int> Step(const std::vector<int>& states, int c,
                        const std::vector<std::vector<int>>& closures) const {
    std::vector<int> next;
    for (int q : states) {
      for (const Transition& t : out_[q]) {
        if (t.label == c) {
          next.insert(next.end(), closures[t.to].begin(), closures[t.to].end());
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
  }

 private:
  void CheckState(int s) const {
    if (s < 0 || s >= num_states()) throw std::out_of_range("no such state");
  }

  std::vector<std::string> alphabet_;
  std::vector<std::vector<Transition>> out_;
  std::vector<bool> accepting_;
  int start_ = 0;
};

// Complete deterministic automaton; `next[s][c]` is defined for every state
// and letter (a sink state may be present).
struct Dfa {
  std::vector<std::string> alphabet;
  std::vector<std::vector<int>> next;
  std::vector<bool> accepting;
  int start = 0;

  int num_states() const { return static_cast<int>(next.size()); }

  bool Accepts(const Word& word) const {
    int s = start;
    for (const std::string& letter : word) {
      auto it = std::lower_bound(alphabet.begin(), alphabet.end(), letter);
      if (it == alphabet.end() || *it != letter) return false;
      s = next[s][static_cast<std::size_t>(it - alphabet.begin())];
    }
    return accepting[s];
  }
};

struct AutomataOptions {
  // Cap on subset states (determinization) or product states (inclusion).
  std::size_t state_cap = 1'000'000;
};

inline Dfa Determinize(const Nfa& nfa, AutomataOptions options = {}) {
  const auto closures = nfa.EpsilonClosures();
  const int letters = static_cast<int>(nfa.alphabet().size());
  Dfa dfa;
  dfa.alphabet = nfa.alphabet();
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> work;
  auto intern = [&](std::vector<int> set) {
    auto [it, inserted] = ids.try_emplace(set, static_cast<int>(dfa.next.size()));
    if (inserted) {
      if (dfa.next.size() >= options.state_cap) {
        throw ResourceExhausted("determinization exceeded " +
                                std::to_string(options.state_cap) + " states");
      }
      dfa.next.emplace_back(static_cast<std::size_t>(letters), -1);
      dfa.accepting.push_back(std::any_of(
          set.begin(), set.end(), [&](int q) { return nfa.accepting(q); }));
      work.push_back(std::move(set));
    }
    return it->second;
  };
  dfa.start = intern(closures[nfa.start()]);
  while (!work.empty()) {
    std::vector<int> set = std::move(work.front());
    work.pop_front();
    const int id = ids.at(set);
    for (int c = 0; c < letters; ++c) {
      const int target = intern(nfa.Step(set, c, closures));
      dfa.next[id][c] = target;
    }
  }
  return dfa;
}

// ---------------------------------------------------------------------------
// Compilation

namespace internal {

template <class Op>
class ThompsonBuilder {
 public:
  explicit ThompsonBuilder(Nfa& nfa) : nfa_(nfa) {}

  // Returns (entry, exit) of the fragment for `t`.
  std::pair<int, int> Build(const Term<Op>& t) {
    using K = typename Term<Op>::Kind;
    const int s = nfa_.AddState();
    const int f = nfa_.AddState();
    switch (t.kind()) {
      case K::kVar: {
        const int c = nfa_.LetterIndex(t.name());
        if (c < 0) {
          throw AlphabetMismatch("variable '" + t.name() +
                                 "' is not in the alphabet");
        }
        nfa_.AddTransition(s, c, f);
        break;
      }
      case K::kZero:
        break;
      case K::kOne:
        nfa_.AddTransition(s, kEpsilon, f);
        break;
      case K::kPlus: {
        auto [s1, f1] = Build(t.left());
        auto [s2, f2] = Build(t.right());
        nfa_.AddTransition(s, kEpsilon, s1);
        nfa_.AddTransition(s, kEpsilon, s2);
        nfa_.AddTransition(f1, kEpsilon, f);
        nfa_.AddTransition(f2, kEpsilon, f);
        break;
      }
      case K::kDot: {
        auto [s1, f1] = Build(t.left());
        auto [s2, f2] = Build(t.right());
        nfa_.AddTransition(s, kEpsilon, s1);
        nfa_.AddTransition(f1, kEpsilon, s2);
        nfa_.AddTransition(f2, kEpsilon, f);
        break;
      }
      case K::kIter: {
        auto [s1, f1] = Build(t.body());
        nfa_.AddTransition(s, kEpsilon, s1);
        nfa_.AddTransition(f1, kEpsilon, s1);
        nfa_.AddTransition(f1, kEpsilon, f);
        if constexpr (Op::kAllowsEmpty) nfa_.AddTransition(s, kEpsilon, f);
        break;
      }
    }
    return {s, f};
  }

 private:
  Nfa& nfa_;
};

}  // namespace internal

// Thompson construction. Throws AlphabetMismatch if `t` mentions a variable
// outside `alphabet`.
template <class Op>
Nfa CompileTerm(const Term<Op>& t, std::vector<std::string> alphabet) {
  Nfa nfa(std::move(alphabet));
  auto [s, f] = internal::ThompsonBuilder<Op>(nfa).Build(t);
  nfa.set_start(s);
  nfa.set_accepting(f);
  return nfa;
}

inline Nfa Compile(const KTerm& t, std::vector<std::string> alphabet) {
  return CompileTerm(t, std::move(alphabet));
}

// '^' denotes one or more iterations.
inline Nfa CompilePlus(const PlusTerm& t, std::vector<std::string> alphabet) {
  return CompileTerm(t, std::move(alphabet));
}

// ---------------------------------------------------------------------------
// Inclusion

struct InclusionResult {
  bool included = true;
  // A shortest word in left \ right when !included.
  std::optional<Word> counterexample;
};

// Product of `left` (state by state) with the lazily determinized `right`,
// searched breadth-first. Throws AlphabetMismatch on differing alphabets and
// ResourceExhausted past options.state_cap product states.
inline InclusionResult Includes(const Nfa& left, const Nfa& right,
                                AutomataOptions options = {}) {
  if (left.alphabet() != right.alphabet()) {
    throw AlphabetMismatch("inclusion check over different alphabets");
  }
  const int letters = static_cast<int>(left.alphabet().size());
  const auto lc = left.EpsilonClosures();
  const auto rc = right.EpsilonClosures();

  std::map<std::vector<int>, int> subset_ids;
  std::vector<std::vector<int>> subsets;
  std::vector<bool> subset_accepting;
  std::vector<std::vector<int>> subset_next;  // -1 = not yet computed
  auto intern_subset = [&](std::vector<int> set) {
    auto [it, inserted] =
        subset_ids.try_emplace(set, static_cast<int>(subsets.size()));
    if (inserted) {
      subset_accepting.push_back(std::any_of(
          set.begin(), set.end(), [&](int q) { return right.accepting(q); }));
      subset_next.emplace_back(static_cast<std::size_t>(letters), -1);
      subsets.push_back(std::move(set));
    }
    return it->second;
  };
  auto right_step = [&](int id, int c) {
    if (subset_next[id][c] < 0) {
      std::vector<int> next = right.Step(subsets[id], c, rc);
      const int target = intern_subset(std::move(next));
      subset_next[id][c] = target;
    }
    return subset_next[id][c];
  };

  struct ProductState {
    int left;
    int subset;
    int parent;
    int letter;
  };
  std::vector<ProductState> states;
  std::unordered_map<long long, int> seen;
  const long long stride = left.num_states();
  std::deque<int> queue;
  auto visit = [&](int q, int subset, int parent, int letter) {
    const long long key = static_cast<long long>(subset) * stride + q;
    if (!seen.try_emplace(key, static_cast<int>(states.size())).second) return -1;
    if (states.size() >= options.state_cap) {
      throw ResourceExhausted("inclusion check exceeded " +
                              std::to_string(options.state_cap) +
                              " product states");
    }
    states.push_back({q, subset, parent, letter});
    queue.push_back(static_cast<int>(states.size()) - 1);
    return static_cast<int>(states.size()) - 1;
  };
  auto word_to = [&](int id) {
    Word w;
    for (int i = id; states[i].parent >= 0; i = states[i].parent) {
      w.push_back(left.alphabet()[states[i].letter]);
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  const int start_subset = intern_subset(rc[right.start()]);
  for (int q : lc[left.start()]) visit(q, start_subset, -1, -1);
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const ProductState st = states[id];
    if (left.accepting(st.left) && !subset_accepting[st.subset]) {
      return InclusionResult{false, word_to(id)};
    }
    for (const Transition& t : left.out(st.left)) {
      if (t.label == kEpsilon) continue;
      const int next_subset = right_step(st.subset, t.label);
      for (int q : lc[t.to]) visit(q, next_subset, id, t.label);
    }
  }
  return InclusionResult{true, std::nullopt};
}

inline bool Equivalent(const Nfa& x, const Nfa& y, AutomataOptions options = {}) {
  return Includes(x, y, options).included && Includes(y, x, options).included;
}

// ---------------------------------------------------------------------------
// Semantic decision procedure

struct Decision {
  bool derivable = false;
  std::optional<Word> counterexample;
};

template <class Op>
struct CompiledSequent {
  Nfa lhs;
  Nfa rhs;
};

// Both sides of `s` interpreted with `Op` and compiled over the sequent's
// variables.
template <class Op>
CompiledSequent<Op> CompileSequent(const Sequent& s) {
  const auto vars = Variables(s);
  std::vector<std::string> alphabet(vars.begin(), vars.end());
  const TermPair<Op> terms = InterpretSequent<Op>(s);
  return {CompileTerm(terms.lhs, alphabet), CompileTerm(terms.rhs, alphabet)};
}

// Derivable iff the language of the interpreted antecedent is included in
// that of the interpreted succedent ('?' read as star for KL, as plus for
// KL+).
inline Decision Decide(Logic logic, const Sequent& s, AutomataOptions options = {}) {
  auto run = [&](const auto& compiled) {
    InclusionResult r = Includes(compiled.lhs, compiled.rhs, options);
    return Decision{r.included, std::move(r.counterexample)};
  };
  if (logic == Logic::kKL) return run(CompileSequent<StarOp>(s));
  return run(CompileSequent<SharpOp>(s));
}

// Graphviz rendering for debugging.
inline std::string ToDot(const Nfa& nfa, const std::string& name = "nfa") {
  std::string out = "digraph " + name + " {\n  rankdir=LR;\n";
  out += "  init [shape=point];\n";
  for (int s = 0; s < nfa.num_states(); ++s) {
    out += "  s" + std::to_string(s) + " [shape=" +
           (nfa.accepting(s) ? "doublecircle" : "circle") + "];\n";
  }
  out += "  init -> s" + std::to_string(nfa.start()) + ";\n";
  for (const Transition& t : nfa.transitions()) {
    out += "  s" + std::to_string(t.from) + " -> s" + std::to_string(t.to) +
           " [label=\"" +
           (t.label == kEpsilon ? std::string("\xCE\xB5") : nfa.alphabet()[t.label]) +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace kl

#endif  // KL_AUTOMATA_HPP_
