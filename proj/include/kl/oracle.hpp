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

// Brute-force ground truth used to validate the automata and the prover:
// length-bounded language enumeration, exhaustive sequent generation, a
// depth-bounded re-implementation of backward search, and seeded random
// term generators. Nothing here depends on automata.hpp or on the prover.

#ifndef KL_ORACLE_HPP_
#define KL_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kl/algebra.hpp"
#include "kl/calculus.hpp"
#include "kl/syntax.hpp"

namespace kl {

using OracleWord = std::vector<std::string>;

// { w in L(t) : |w| <= max_len }.
struct BoundedLanguage {
  std::size_t max_len = 0;
  std::set<OracleWord> words;

  bool Contains(const OracleWord& w) const { return words.count(w) > 0; }
};

namespace internal {

inline std::set<OracleWord> Concatenate(const std::set<OracleWord>& a,
                                        const std::set<OracleWord>& b,
                                        std::size_t max_len) {
  std::set<OracleWord> out;
  for (const OracleWord& u : a) {
    for (const OracleWord& v : b) {
      if (u.size() + v.size() > max_len) continue;
      OracleWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.insert(std::move(w));
    }
  }
  return out;
}

template <class Op>
std::set<OracleWord> Words(const Term<Op>& t, std::size_t max_len) {
  using K = typename Term<Op>::Kind;
  switch (t.kind()) {
    case K::kVar:
      if (max_len == 0) return {};
      return {OracleWord{t.name()}};
    case K::kZero:
      return {};
    case K::kOne:
      return {OracleWord{}};
    case K::kPlus: {
      auto a = Words(t.left(), max_len);
      auto b = Words(t.right(), max_len);
      a.insert(b.begin(), b.end());
      return a;
    }
    case K::kDot:
      return Concatenate(Words(t.left(), max_len), Words(t.right(), max_len),
                         max_len);
    case K::kIter: {
      const auto body = Words(t.body(), max_len);
      std::set<OracleWord> acc = body;
      if constexpr (Op::kAllowsEmpty) acc.insert(OracleWord{});
      for (;;) {
        auto grown = Concatenate(body, acc, max_len);
        const std::size_t before = acc.size();
        acc.insert(grown.begin(), grown.end());
        if (acc.size() == before) break;
      }
      return acc;
    }
  }
  return {};
}

}  // namespace internal

template <class Op>
BoundedLanguage EnumerateLanguage(const Term<Op>& t, std::size_t max_len) {
  return BoundedLanguage{max_len, internal::Words(t, max_len)};
}

// Necessary but not sufficient for true inclusion.
template <class Op>
bool BoundedInclusion(const Term<Op>& x, const Term<Op>& y, std::size_t max_len) {
  const auto a = internal::Words(x, max_len);
  const auto b = internal::Words(y, max_len);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// Exhaustive formula and sequent generation

// All formulas with exactly `size` nodes over `variables` and the constants,
// in a deterministic order. Results for smaller sizes are cached in `cache`.
class FormulaEnumerator {
 public:
  explicit FormulaEnumerator(std::vector<std::string> variables)
      : variables_(std::move(variables)) {}

  const std::vector<Formula>& OfSize(std::size_t size) {
    while (by_size_.size() <= size) Grow();
    return by_size_[size];
  }

 private:
  void Grow() {
    const std::size_t n = by_size_.size();
    std::vector<Formula> out;
    if (n == 1) {
      for (const auto& v : variables_) out.push_back(Formula::Var(v));
      out.push_back(Formula::Zero());
      out.push_back(Formula::One());
    } else if (n > 1) {
      for (const Formula& f : by_size_[n - 1]) out.push_back(Formula::Query(f));
      for (std::size_t l = 1; l + 1 < n; ++l) {
        const std::size_t r = n - 1 - l;
        for (const Formula& a : by_size_[l]) {
          for (const Formula& b : by_size_[r]) {
            out.push_back(Formula::Or(a, b));
            out.push_back(Formula::Fuse(a, b));
          }
        }
      }
    }
    by_size_.push_back(std::move(out));
  }

  std::vector<std::string> variables_;
  std::vector<std::vector<Formula>> by_size_;
};

namespace internal {

// Ordered compositions of `total` into positive parts.
inline void Compositions(std::size_t total, std::vector<std::size_t>& prefix,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (total == 0) {
    fn(prefix);
    return;
  }
  for (std::size_t part = 1; part <= total; ++part) {
    prefix.push_back(part);
    Compositions(total - part, prefix, fn);
    prefix.pop_back();
  }
}

inline void Antecedents(FormulaEnumerator& formulas,
                        const std::vector<std::size_t>& sizes, std::size_t index,
                        std::vector<Formula>& current,
                        const std::function<void(const std::vector<Formula>&)>& fn) {
  if (index == sizes.size()) {
    fn(current);
    return;
  }
  // Copy: OfSize may grow the cache while we iterate deeper.
  const std::vector<Formula> choices = formulas.OfSize(sizes[index]);
  for (const Formula& f : choices) {
    current.push_back(f);
    Antecedents(formulas, sizes, index + 1, current, fn);
    current.pop_back();
  }
}

}  // namespace internal

// Calls `fn` once for every sequent over `variables` (plus 0 and 1) whose
// total node count is at most `max_total_size`, ordered by total size, then
// succedent size, then antecedent shape.
inline void ForEachSequent(const std::vector<std::string>& variables,
                           std::size_t max_total_size,
                           const std::function<void(const Sequent&)>& fn) {
  FormulaEnumerator formulas(variables);
  formulas.OfSize(max_total_size);
  for (std::size_t total = 1; total <= max_total_size; ++total) {
    for (std::size_t succ_size = 1; succ_size <= total; ++succ_size) {
      const std::vector<Formula>& succs = formulas.OfSize(succ_size);
      std::vector<std::size_t> prefix;
      internal::Compositions(
          total - succ_size, prefix, [&](const std::vector<std::size_t>& sizes) {
            std::vector<Formula> current;
            internal::Antecedents(
                formulas, sizes, 0, current, [&](const std::vector<Formula>& ant) {
                  for (const Formula& succ : succs) fn(Sequent{ant, succ});
                });
          });
    }
  }
}

inline std::vector<Sequent> EnumerateSequents(
    const std::vector<std::string>& variables, std::size_t max_total_size) {
  std::vector<Sequent> out;
  ForEachSequent(variables, max_total_size,
                 [&](const Sequent& s) { out.push_back(s); });
  return out;
}

// ---------------------------------------------------------------------------
// Depth-bounded backward search, written independently of calculus.hpp's
// rule matcher. No memo table: only the current branch is remembered, to
// skip goals that repeat on it.

namespace internal {

using Premises = std::vector<Sequent>;

inline std::vector<Formula> Cat(std::vector<Formula> a, const std::vector<Formula>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline std::vector<Premises> BackwardSteps(Logic logic, const Sequent& s) {
  using K = Formula::Kind;
  const auto& g = s.antecedent;
  const Formula& c = s.succedent;
  const std::size_t n = g.size();
  const bool kl = logic == Logic::kKL;
  auto sub = [&](std::size_t b, std::size_t e) {
    return std::vector<Formula>(g.begin() + static_cast<std::ptrdiff_t>(b),
                                g.begin() + static_cast<std::ptrdiff_t>(e));
  };
  std::vector<Premises> steps;

  // Axioms.
  if (n == 1 && g[0] == c) steps.push_back({});
  if (n == 0 && c.is(K::kOne)) steps.push_back({});
  if (kl && n == 0 && c.is(K::kQuery)) steps.push_back({});
  for (const Formula& f : g) {
    if (f.is(K::kZero)) {
      steps.push_back({});
      break;
    }
  }
  if (!steps.empty()) return steps;  // any axiom closes the goal

  // Succedent rules.
  if (c.is(K::kOr)) {
    steps.push_back({Sequent{g, c.left()}});
    steps.push_back({Sequent{g, c.right()}});
    const Formula l = c.left();
    const Formula r = c.right();
    if (l.is(K::kFuse) && r.is(K::kFuse) && l.left() == r.left()) {
      steps.push_back(
          {Sequent{g, Formula::Fuse(l.left(), Formula::Or(l.right(), r.right()))}});
    }
  }
  if (c.is(K::kFuse)) {
    for (std::size_t k = 0; k <= n; ++k) {
      steps.push_back({Sequent{sub(0, k), c.left()}, Sequent{sub(k, n), c.right()}});
    }
  }
  if (c.is(K::kQuery)) {
    const Formula a = c.body();
    if (!kl) steps.push_back({Sequent{g, a}});
    for (std::size_t k = 1; k <= n; ++k) {
      // Delta first, then Delta last; Delta nonempty.
      steps.push_back({Sequent{sub(0, k), a}, Sequent{sub(k, n), c}});
      steps.push_back({Sequent{sub(n - k, n), a}, Sequent{sub(0, n - k), c}});
    }
  }

  // Antecedent rules.
  for (std::size_t i = 0; i < n; ++i) {
    const Formula& f = g[i];
    const auto before = sub(0, i);
    const auto after = sub(i + 1, n);
    if (f.is(K::kOr)) {
      steps.push_back({Sequent{Cat(Cat(before, {f.left()}), after), c},
                       Sequent{Cat(Cat(before, {f.right()}), after), c}});
    } else if (f.is(K::kFuse)) {
      steps.push_back({Sequent{Cat(Cat(before, {f.left(), f.right()}), after), c}});
    } else if (f.is(K::kOne)) {
      steps.push_back({Sequent{Cat(before, after), c}});
    }
  }
  if (n > 0 && g.front().is(K::kQuery)) {
    const Formula a = g.front().body();
    const auto rest = sub(1, n);
    steps.push_back({Sequent{{a, c}, c},
                     Sequent{kl ? rest : Cat({a}, rest), c}});
  }
  if (n > 0 && g.back().is(K::kQuery)) {
    const Formula a = g.back().body();
    const auto rest = sub(0, n - 1);
    steps.push_back({Sequent{{c, a}, c},
                     Sequent{kl ? rest : Cat(rest, {a}), c}});
  }
  return steps;
}

inline bool BruteProve(Logic logic, const Sequent& s, std::size_t depth,
                       std::vector<Sequent>& branch) {
  if (depth == 0) return false;
  if (std::find(branch.begin(), branch.end(), s) != branch.end()) return false;
  branch.push_back(s);
  bool found = false;
  for (const Premises& step : BackwardSteps(logic, s)) {
    bool all = true;
    for (const Sequent& p : step) {
      if (!BruteProve(logic, p, depth - 1, branch)) {
        all = false;
        break;
      }
    }
    if (all) {
      found = true;
      break;
    }
  }
  branch.pop_back();
  return found;
}

}  // namespace internal

// True iff a cut-free proof of height at most `depth` exists.
inline bool BruteProve(Logic logic, const Sequent& s, std::size_t depth) {
  std::vector<Sequent> branch;
  return internal::BruteProve(logic, s, depth, branch);
}

// ---------------------------------------------------------------------------
// Seeded random generation

// Random term with between 1 and `max_size` nodes over `variables`.
template <class Op>
Term<Op> RandomTerm(std::mt19937& rng, const std::vector<std::string>& variables,
                    std::size_t max_size) {
  using T = Term<Op>;
  std::uniform_int_distribution<std::size_t> pick_size(1, std::max<std::size_t>(1, max_size));
  std::function<T(std::size_t)> gen = [&](std::size_t size) -> T {
    if (size <= 1) {
      std::uniform_int_distribution<std::size_t> leaf(0, variables.size() + 1);
      const std::size_t k = leaf(rng);
      if (k < variables.size()) return T::Var(variables[k]);
      return k == variables.size() ? T::Zero() : T::One();
    }
    // Unary node, or a binary node splitting the remaining size.
    std::uniform_int_distribution<int> op(0, 2);
    const int o = size == 2 ? 0 : op(rng);
    if (o == 0) return T::Iter(gen(size - 1));
    std::uniform_int_distribution<std::size_t> split(1, size - 2);
    const std::size_t l = split(rng);
    return o == 1 ? T::Plus(gen(l), gen(size - 1 - l))
                  : T::Dot(gen(l), gen(size - 1 - l));
  };
  return gen(pick_size(rng));
}

// Random formula with exactly `size` nodes.
inline Formula RandomFormula(std::mt19937& rng, const std::vector<std::string>& variables,
                             std::size_t size) {
  if (size <= 1) {
    std::uniform_int_distribution<std::size_t> leaf(0, variables.size() + 1);
    const std::size_t k = leaf(rng);
    if (k < variables.size()) return Formula::Var(variables[k]);
    return k == variables.size() ? Formula::Zero() : Formula::One();
  }
  std::uniform_int_distribution<int> op(0, 2);
  const int o = size == 2 ? 0 : op(rng);
  if (o == 0) return Formula::Query(RandomFormula(rng, variables, size - 1));
  std::uniform_int_distribution<std::size_t> split(1, size - 2);
  const std::size_t l = split(rng);
  Formula a = RandomFormula(rng, variables, l);
  Formula b = RandomFormula(rng, variables, size - 1 - l);
  return o == 1 ? Formula::Or(a, b) : Formula::Fuse(a, b);
}

}  // namespace kl

#endif  // KL_ORACLE_HPP_
