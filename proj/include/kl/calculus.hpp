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

// Sequent calculi for KL and KL+: rule schemas, proof trees, proof checking
// and cut-free backward proof search.

#ifndef KL_CALCULUS_HPP_
#define KL_CALCULUS_HPP_

#include <array>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kl/error.hpp"
#include "kl/syntax.hpp"

namespace kl {

enum class Logic { kKL, kKLPlus };

inline std::string_view LogicName(Logic logic) {
  return logic == Logic::kKL ? "kl" : "kl+";
}

enum class Rule {
  kAx,
  kCut,
  kOrL,
  kOrR1,
  kOrR2,
  kFuseR,
  kFuseL,
  kDist,
  kAxQ,
  kQIntroR1,
  kQIntroR2,
  kQIntroL1,
  kQIntroL2,
  kOneL,
  kOneR,
  kZeroL,
  kPlusQ,
  kPlusQL1,
  kPlusQL2,
};

inline constexpr std::array<Rule, 19> kAllRules = {
    Rule::kAx,       Rule::kCut,      Rule::kOrL,      Rule::kOrR1,
    Rule::kOrR2,     Rule::kFuseR,    Rule::kFuseL,    Rule::kDist,
    Rule::kAxQ,      Rule::kQIntroR1, Rule::kQIntroR2, Rule::kQIntroL1,
    Rule::kQIntroL2, Rule::kOneL,     Rule::kOneR,     Rule::kZeroL,
    Rule::kPlusQ,    Rule::kPlusQL1,  Rule::kPlusQL2,
};

inline std::string_view RuleName(Rule rule) {
  switch (rule) {
    case Rule::kAx: return "Ax";
    case Rule::kCut: return "Cut";
    case Rule::kOrL: return "OrL";
    case Rule::kOrR1: return "OrR1";
    case Rule::kOrR2: return "OrR2";
    case Rule::kFuseR: return "FuseR";
    case Rule::kFuseL: return "FuseL";
    case Rule::kDist: return "Dist";
    case Rule::kAxQ: return "AxQ";
    case Rule::kQIntroR1: return "QIntroR1";
    case Rule::kQIntroR2: return "QIntroR2";
    case Rule::kQIntroL1: return "QIntroL1";
    case Rule::kQIntroL2: return "QIntroL2";
    case Rule::kOneL: return "OneL";
    case Rule::kOneR: return "OneR";
    case Rule::kZeroL: return "ZeroL";
    case Rule::kPlusQ: return "PlusQ";
    case Rule::kPlusQL1: return "PlusQL1";
    case Rule::kPlusQL2: return "PlusQL2";
  }
  return "?";
}

inline std::optional<Rule> RuleFromName(std::string_view name) {
  for (Rule r : kAllRules) {
    if (RuleName(r) == name) return r;
  }
  return std::nullopt;
}

// Cut belongs to both logics but is never produced by search.
inline bool RuleInLogic(Rule rule, Logic logic) {
  switch (rule) {
    case Rule::kAxQ:
    case Rule::kQIntroL1:
    case Rule::kQIntroL2:
      return logic == Logic::kKL;
    case Rule::kPlusQ:
    case Rule::kPlusQL1:
    case Rule::kPlusQL2:
      return logic == Logic::kKLPlus;
    default:
      return true;
  }
}

inline bool IsClosureRule(Rule rule) {
  return rule == Rule::kAx || rule == Rule::kAxQ || rule == Rule::kOneR ||
         rule == Rule::kZeroL;
}

// Metavariable assignment for one rule application. Which fields a rule
// reads is fixed by its schema (see Instantiate); the rest stay empty.
struct Bindings {
  std::vector<Formula> ctx_gamma;
  std::vector<Formula> ctx_delta;
  std::vector<Formula> ctx_theta;
  std::optional<Formula> alpha;
  std::optional<Formula> beta;
  std::optional<Formula> gamma;

  friend bool operator==(const Bindings&, const Bindings&) = default;
};

struct RuleInstance {
  Rule rule;
  Bindings bindings;
  Sequent conclusion;
  std::vector<Sequent> premises;
};

namespace internal {

using Seq = std::vector<Formula>;

inline Seq Concat(std::initializer_list<const Seq*> parts) {
  Seq out;
  for (const Seq* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

inline Seq One(const Formula& f) { return Seq{f}; }

inline Seq Slice(const Seq& s, std::size_t begin, std::size_t end) {
  return Seq(s.begin() + static_cast<std::ptrdiff_t>(begin),
             s.begin() + static_cast<std::ptrdiff_t>(end));
}

}  // namespace internal

// Builds the conclusion and premises of `rule` under `b`. Returns nullopt if
// a metavariable the schema needs is unbound.
inline std::optional<RuleInstance> Instantiate(Rule rule, const Bindings& b) {
  using internal::Concat;
  using internal::Seq;
  const Seq& G = b.ctx_gamma;
  const Seq& D = b.ctx_delta;
  const Seq& T = b.ctx_theta;
  auto need = [&](std::initializer_list<const std::optional<Formula>*> fs) {
    for (const auto* f : fs) {
      if (!f->has_value()) return false;
    }
    return true;
  };
  RuleInstance out{rule, b, Sequent{{}, Formula::One()}, {}};
  auto seq = [](Seq ant, const Formula& succ) {
    return Sequent{std::move(ant), succ};
  };
  switch (rule) {
    case Rule::kAx: {
      if (!need({&b.alpha})) return std::nullopt;
      const Formula& a = *b.alpha;
      out.conclusion = seq({a}, a);
      break;
    }
    case Rule::kCut: {
      if (!need({&b.alpha, &b.beta})) return std::nullopt;
      const Seq a = internal::One(*b.alpha);
      out.conclusion = seq(Concat({&G, &T, &D}), *b.beta);
      out.premises = {seq(Concat({&G, &a, &D}), *b.beta), seq(T, *b.alpha)};
      break;
    }
    case Rule::kOrL: {
      if (!need({&b.alpha, &b.beta, &b.gamma})) return std::nullopt;
      const Seq ab = internal::One(Formula::Or(*b.alpha, *b.beta));
      const Seq a = internal::One(*b.alpha);
      const Seq c = internal::One(*b.beta);
      out.conclusion = seq(Concat({&G, &ab, &D}), *b.gamma);
      out.premises = {seq(Concat({&G, &a, &D}), *b.gamma),
                      seq(Concat({&G, &c, &D}), *b.gamma)};
      break;
    }
    case Rule::kOrR1:
    case Rule::kOrR2: {
      if (!need({&b.alpha, &b.beta})) return std::nullopt;
      out.conclusion = seq(G, Formula::Or(*b.alpha, *b.beta));
      out.premises = {seq(G, rule == Rule::kOrR1 ? *b.alpha : *b.beta)};
      break;
    }
    case Rule::kFuseR: {
      if (!need({&b.alpha, &b.beta})) return std::nullopt;
      out.conclusion = seq(Concat({&G, &D}), Formula::Fuse(*b.alpha, *b.beta));
      out.premises = {seq(G, *b.alpha), seq(D, *b.beta)};
      break;
    }
    case Rule::kFuseL: {
      if (!need({&b.alpha, &b.beta, &b.gamma})) return std::nullopt;
      const Seq ab = internal::One(Formula::Fuse(*b.alpha, *b.beta));
      const Seq split{*b.alpha, *b.beta};
      out.conclusion = seq(Concat({&G, &ab, &D}), *b.gamma);
      out.premises = {seq(Concat({&G, &split, &D}), *b.gamma)};
      break;
    }
    case Rule::kDist: {
      if (!need({&b.alpha, &b.beta, &b.gamma})) return std::nullopt;
      const Formula& a = *b.alpha;
      out.conclusion =
          seq(G, Formula::Or(Formula::Fuse(a, *b.beta), Formula::Fuse(a, *b.gamma)));
      out.premises = {seq(G, Formula::Fuse(a, Formula::Or(*b.beta, *b.gamma)))};
      break;
    }
    case Rule::kAxQ: {
      if (!need({&b.alpha})) return std::nullopt;
      out.conclusion = seq({}, Formula::Query(*b.alpha));
      break;
    }
    case Rule::kQIntroR1:
    case Rule::kQIntroR2: {
      if (!need({&b.alpha})) return std::nullopt;
      const Formula q = Formula::Query(*b.alpha);
      out.conclusion = seq(rule == Rule::kQIntroR1 ? Concat({&D, &G})
                                                   : Concat({&G, &D}),
                           q);
      out.premises = {seq(D, *b.alpha), seq(G, q)};
      break;
    }
    case Rule::kQIntroL1:
    case Rule::kPlusQL1: {
      if (!need({&b.alpha, &b.beta})) return std::nullopt;
      const Seq q = internal::One(Formula::Query(*b.alpha));
      const Seq a = internal::One(*b.alpha);
      out.conclusion = seq(Concat({&q, &G}), *b.beta);
      out.premises = {seq({*b.alpha, *b.beta}, *b.beta),
                      seq(rule == Rule::kQIntroL1 ? G : Concat({&a, &G}), *b.beta)};
      break;
    }
    case Rule::kQIntroL2:
    case Rule::kPlusQL2: {
      if (!need({&b.alpha, &b.beta})) return std::nullopt;
      const Seq q = internal::One(Formula::Query(*b.alpha));
      const Seq a = internal::One(*b.alpha);
      out.conclusion = seq(Concat({&G, &q}), *b.beta);
      out.premises = {seq({*b.beta, *b.alpha}, *b.beta),
                      seq(rule == Rule::kQIntroL2 ? G : Concat({&G, &a}), *b.beta)};
      break;
    }
    case Rule::kOneL: {
      if (!need({&b.alpha})) return std::nullopt;
      const Seq one = internal::One(Formula::One());
      out.conclusion = seq(Concat({&G, &one, &D}), *b.alpha);
      out.premises = {seq(Concat({&G, &D}), *b.alpha)};
      break;
    }
    case Rule::kOneR:
      out.conclusion = seq({}, Formula::One());
      break;
    case Rule::kZeroL: {
      if (!need({&b.alpha})) return std::nullopt;
      const Seq zero = internal::One(Formula::Zero());
      out.conclusion = seq(Concat({&G, &zero, &D}), *b.alpha);
      break;
    }
    case Rule::kPlusQ: {
      if (!need({&b.alpha})) return std::nullopt;
      out.conclusion = seq(G, Formula::Query(*b.alpha));
      out.premises = {seq(G, *b.alpha)};
      break;
    }
  }
  return out;
}

// Every backward instance of `rule` whose conclusion is `goal`. With
// `for_search` set, the QIntroR1/QIntroR2 splits with empty Delta are omitted:
// they reproduce the goal as their own second premise.
inline std::vector<RuleInstance> MatchRule(Rule rule, const Sequent& goal,
                                           bool for_search = true) {
  using internal::Slice;
  using K = Formula::Kind;
  const auto& ant = goal.antecedent;
  const Formula& succ = goal.succedent;
  const std::size_t n = ant.size();
  std::vector<RuleInstance> out;
  auto emit = [&](Bindings b) {
    if (auto inst = Instantiate(rule, b)) out.push_back(std::move(*inst));
  };
  // Instances at each antecedent position holding a formula of kind `k`.
  auto at_each = [&](K k, auto&& bind) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!ant[i].is(k)) continue;
      Bindings b;
      b.ctx_gamma = Slice(ant, 0, i);
      b.ctx_delta = Slice(ant, i + 1, n);
      bind(b, ant[i]);
      emit(std::move(b));
    }
  };
  switch (rule) {
    case Rule::kAx:
      if (n == 1 && ant[0] == succ) {
        Bindings b;
        b.alpha = succ;
        emit(b);
      }
      break;
    case Rule::kCut:
      // The cut formula is not determined by the conclusion.
      break;
    case Rule::kOrL:
      at_each(K::kOr, [&](Bindings& b, const Formula& f) {
        b.alpha = f.left();
        b.beta = f.right();
        b.gamma = succ;
      });
      break;
    case Rule::kOrR1:
    case Rule::kOrR2:
      if (succ.is(K::kOr)) {
        Bindings b;
        b.ctx_gamma = ant;
        b.alpha = succ.left();
        b.beta = succ.right();
        emit(b);
      }
      break;
    case Rule::kFuseR:
      if (succ.is(K::kFuse)) {
        for (std::size_t k = 0; k <= n; ++k) {
          Bindings b;
          b.ctx_gamma = Slice(ant, 0, k);
          b.ctx_delta = Slice(ant, k, n);
          b.alpha = succ.left();
          b.beta = succ.right();
          emit(b);
        }
      }
      break;
    case Rule::kFuseL:
      at_each(K::kFuse, [&](Bindings& b, const Formula& f) {
        b.alpha = f.left();
        b.beta = f.right();
        b.gamma = succ;
      });
      break;
    case Rule::kDist:
      if (succ.is(K::kOr) && succ.left().is(K::kFuse) &&
          succ.right().is(K::kFuse) &&
          succ.left().left() == succ.right().left()) {
        Bindings b;
        b.ctx_gamma = ant;
        b.alpha = succ.left().left();
        b.beta = succ.left().right();
        b.gamma = succ.right().right();
        emit(b);
      }
      break;
    case Rule::kAxQ:
      if (n == 0 && succ.is(K::kQuery)) {
        Bindings b;
        b.alpha = succ.body();
        emit(b);
      }
      break;
    case Rule::kQIntroR1:
    case Rule::kQIntroR2:
      if (succ.is(K::kQuery)) {
        const std::size_t min_delta = for_search ? 1 : 0;
        for (std::size_t d = min_delta; d <= n; ++d) {
          Bindings b;
          b.alpha = succ.body();
          if (rule == Rule::kQIntroR1) {
            b.ctx_delta = Slice(ant, 0, d);
            b.ctx_gamma = Slice(ant, d, n);
          } else {
            b.ctx_gamma = Slice(ant, 0, n - d);
            b.ctx_delta = Slice(ant, n - d, n);
          }
          emit(b);
        }
      }
      break;
    case Rule::kQIntroL1:
    case Rule::kPlusQL1:
      if (n > 0 && ant.front().is(K::kQuery)) {
        Bindings b;
        b.alpha = ant.front().body();
        b.beta = succ;
        b.ctx_gamma = Slice(ant, 1, n);
        emit(b);
      }
      break;
    case Rule::kQIntroL2:
    case Rule::kPlusQL2:
      if (n > 0 && ant.back().is(K::kQuery)) {
        Bindings b;
        b.alpha = ant.back().body();
        b.beta = succ;
        b.ctx_gamma = Slice(ant, 0, n - 1);
        emit(b);
      }
      break;
    case Rule::kOneL:
      at_each(K::kOne, [&](Bindings& b, const Formula&) { b.alpha = succ; });
      break;
    case Rule::kOneR:
      if (n == 0 && succ.is(K::kOne)) emit(Bindings{});
      break;
    case Rule::kZeroL:
      at_each(K::kZero, [&](Bindings& b, const Formula&) { b.alpha = succ; });
      break;
    case Rule::kPlusQ:
      if (succ.is(K::kQuery)) {
        Bindings b;
        b.ctx_gamma = ant;
        b.alpha = succ.body();
        emit(b);
      }
      break;
  }
  return out;
}

// Search order: closure rules, unary right rules, left rules, splitting rules.
inline constexpr std::array<Rule, 18> kSearchOrder = {
    Rule::kAx,       Rule::kAxQ,      Rule::kOneR,     Rule::kZeroL,
    Rule::kOrR1,     Rule::kOrR2,     Rule::kPlusQ,    Rule::kDist,
    Rule::kOrL,      Rule::kFuseL,    Rule::kOneL,     Rule::kQIntroL1,
    Rule::kQIntroL2, Rule::kPlusQL1,  Rule::kPlusQL2,  Rule::kFuseR,
    Rule::kQIntroR1, Rule::kQIntroR2,
};

// All backward instances of the non-cut rules of `logic` at `goal`.
inline std::vector<RuleInstance> ApplicableRules(Logic logic,
                                                 const Sequent& goal) {
  std::vector<RuleInstance> out;
  for (Rule r : kSearchOrder) {
    if (!RuleInLogic(r, logic)) continue;
    auto matched = MatchRule(r, goal);
    for (auto& inst : matched) out.push_back(std::move(inst));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proof trees

struct ProofTree {
  Sequent conclusion;
  Rule rule;
  Bindings bindings;
  std::vector<ProofTree> premises;

  std::size_t height() const {
    std::size_t h = 0;
    for (const ProofTree& p : premises) h = std::max(h, p.height());
    return h + 1;
  }

  bool uses_cut() const {
    if (rule == Rule::kCut) return true;
    for (const ProofTree& p : premises) {
      if (p.uses_cut()) return true;
    }
    return false;
  }
};

// Recovers bindings for a node given only its conclusion and premise
// conclusions. Returns nullopt when no instance of `rule` fits.
inline std::optional<Bindings> InferBindings(
    Rule rule, const Sequent& conclusion, const std::vector<Sequent>& premises) {
  if (rule == Rule::kCut) {
    if (premises.size() != 2) return std::nullopt;
    const auto& theta = premises[1].antecedent;
    const auto& ant = conclusion.antecedent;
    if (theta.size() > ant.size()) return std::nullopt;
    for (std::size_t i = 0; i + theta.size() <= ant.size(); ++i) {
      Bindings b;
      b.ctx_gamma = internal::Slice(ant, 0, i);
      b.ctx_theta = theta;
      b.ctx_delta = internal::Slice(ant, i + theta.size(), ant.size());
      b.alpha = premises[1].succedent;
      b.beta = conclusion.succedent;
      auto inst = Instantiate(rule, b);
      if (inst && inst->conclusion == conclusion && inst->premises == premises) {
        return b;
      }
    }
    return std::nullopt;
  }
  for (auto& inst : MatchRule(rule, conclusion, /*for_search=*/false)) {
    if (inst.premises == premises) return std::move(inst.bindings);
  }
  return std::nullopt;
}

struct Violation {
  // Child indices from the root, e.g. "root/1/0".
  std::string path;
  Rule rule;
  Sequent conclusion;
  std::string reason;
};

struct CheckResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

namespace internal {

inline void CheckNode(Logic logic, const ProofTree& node, bool allow_cut,
                      const std::string& path, CheckResult& result) {
  auto fail = [&](std::string reason) {
    result.violations.push_back(
        Violation{path, node.rule, node.conclusion, std::move(reason)});
  };
  if (!RuleInLogic(node.rule, logic)) {
    fail(std::string(RuleName(node.rule)) + " is not a rule of " +
         std::string(LogicName(logic)));
  } else if (node.rule == Rule::kCut && !allow_cut) {
    fail("Cut is not allowed in this check");
  } else if (auto inst = Instantiate(node.rule, node.bindings); !inst) {
    fail("bindings do not cover the schema of " +
         std::string(RuleName(node.rule)));
  } else if (inst->conclusion != node.conclusion) {
    fail("conclusion does not match the schema; expected " +
         ToString(inst->conclusion));
  } else if (inst->premises.size() != node.premises.size()) {
    fail("expected " + std::to_string(inst->premises.size()) +
         " premises, found " + std::to_string(node.premises.size()));
  } else {
    for (std::size_t i = 0; i < node.premises.size(); ++i) {
      if (node.premises[i].conclusion != inst->premises[i]) {
        fail("premise " + std::to_string(i) + " should be " +
             ToString(inst->premises[i]) + ", found " +
             ToString(node.premises[i].conclusion));
      }
    }
  }
  for (std::size_t i = 0; i < node.premises.size(); ++i) {
    CheckNode(logic, node.premises[i], allow_cut,
              path + "/" + std::to_string(i), result);
  }
}

}  // namespace internal

inline CheckResult CheckProof(Logic logic, const ProofTree& tree,
                              bool allow_cut = false) {
  CheckResult result;
  internal::CheckNode(logic, tree, allow_cut, "root", result);
  return result;
}

// ---------------------------------------------------------------------------
// Proof search

struct ProveOptions {
  // Maximum number of distinct sequents explored before giving up.
  std::size_t state_cap = 1'000'000;
};

struct ProveStats {
  std::size_t sequents_explored = 0;
  std::size_t instances = 0;
};

// Cut-free backward search. The sequents reachable from the goal through
// ApplicableRules form a finite graph that may contain cycles (the left
// ?-rules copy the succedent into the antecedent); derivability is its least
// fixpoint, computed by counter propagation while the graph is expanded
// breadth-first. Stops as soon as the goal is proven.
//
// Throws ResourceExhausted when more than options.state_cap sequents are
// reached.
class Prover {
 public:
  explicit Prover(Logic logic, ProveOptions options = {})
      : logic_(logic), options_(options) {}

  std::optional<ProofTree> Prove(const Sequent& goal) {
    Reset();
    const int root = Intern(goal);
    while (!frontier_.empty() && !proven_[root].has_value()) {
      const int node = frontier_.front();
      frontier_.pop_front();
      if (!proven_[node].has_value()) Expand(node);
    }
    stats_.sequents_explored = nodes_.size();
    if (!proven_[root].has_value()) return std::nullopt;
    return Extract(root);
  }

  const ProveStats& stats() const { return stats_; }

 private:
  struct Instance {
    RuleInstance rule;
    std::vector<int> premises;
    std::size_t remaining = 0;
  };

  void Reset() {
    nodes_.clear();
    index_.clear();
    instances_.clear();
    dependents_.clear();
    proven_.clear();
    frontier_.clear();
    stats_ = {};
  }

  int Intern(const Sequent& s) {
    auto [it, inserted] = index_.try_emplace(s, static_cast<int>(nodes_.size()));
    if (inserted) {
      if (nodes_.size() >= options_.state_cap) {
        throw ResourceExhausted("proof search exceeded " +
                                std::to_string(options_.state_cap) +
                                " sequents");
      }
      nodes_.push_back(s);
      instances_.emplace_back();
      dependents_.emplace_back();
      proven_.emplace_back();
      frontier_.push_back(it->second);
    }
    return it->second;
  }

  void Expand(int node) {
    // Copy: Intern may reallocate nodes_.
    const Sequent goal = nodes_[node];
    for (RuleInstance& ri : ApplicableRules(logic_, goal)) {
      Instance inst{std::move(ri), {}, 0};
      for (const Sequent& p : inst.rule.premises) {
        inst.premises.push_back(Intern(p));
      }
      const int k = static_cast<int>(instances_[node].size());
      for (int p : inst.premises) {
        if (proven_[p].has_value()) continue;
        ++inst.remaining;
        dependents_[p].emplace_back(node, k);
      }
      const bool ready = inst.remaining == 0;
      instances_[node].push_back(std::move(inst));
      ++stats_.instances;
      if (ready && !proven_[node].has_value()) MarkProven(node, k);
    }
  }

  void MarkProven(int node, int instance) {
    std::deque<std::pair<int, int>> work{{node, instance}};
    while (!work.empty()) {
      auto [n, k] = work.front();
      work.pop_front();
      if (proven_[n].has_value()) continue;
      proven_[n] = k;
      for (auto [m, j] : dependents_[n]) {
        Instance& inst = instances_[m][j];
        if (--inst.remaining == 0 && !proven_[m].has_value()) {
          work.emplace_back(m, j);
        }
      }
    }
  }

  ProofTree Extract(int node) const {
    const Instance& inst = instances_[node][*proven_[node]];
    ProofTree tree{nodes_[node], inst.rule.rule, inst.rule.bindings, {}};
    for (int p : inst.premises) tree.premises.push_back(Extract(p));
    return tree;
  }

  Logic logic_;
  ProveOptions options_;
  std::vector<Sequent> nodes_;
  std::unordered_map<Sequent, int, SequentHash> index_;
  std::vector<std::vector<Instance>> instances_;
  std::vector<std::vector<std::pair<int, int>>> dependents_;
  std::vector<std::optional<int>> proven_;
  std::deque<int> frontier_;
  ProveStats stats_;
};

inline std::optional<ProofTree> Prove(Logic logic, const Sequent& goal,
                                      ProveOptions options = {}) {
  return Prover(logic, options).Prove(goal);
}

// gamma1, ..., gammaN |- alpha  becomes  gamma1 . ... . gammaN |- alpha
// (left-associated); the empty antecedent becomes 1.
inline Sequent FlattenAntecedent(const Sequent& s) {
  if (s.antecedent.empty()) return Sequent{{Formula::One()}, s.succedent};
  Formula acc = s.antecedent.front();
  for (std::size_t i = 1; i < s.antecedent.size(); ++i) {
    acc = Formula::Fuse(acc, s.antecedent[i]);
  }
  return Sequent{{acc}, s.succedent};
}

}  // namespace kl

#endif  // KL_CALCULUS_HPP_
