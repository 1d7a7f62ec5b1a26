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

// Enumeration cross-validation: runs the prover, the automata decision
// procedure and the brute-force oracles over every small sequent and counts
// disagreements.

#ifndef KL_CROSSVAL_HPP_
#define KL_CROSSVAL_HPP_

#include <cstddef>
#include <string>
#include <thread>
#include <vector>

#include "kl/algebra.hpp"
#include "kl/automata.hpp"
#include "kl/calculus.hpp"
#include "kl/oracle.hpp"
#include "kl/syntax.hpp"

namespace kl {

struct CrossvalOptions {
  std::vector<std::string> variables = {"a", "b"};
  std::vector<Logic> logics = {Logic::kKL, Logic::kKLPlus};
  std::size_t max_total_size = 6;
  std::size_t max_len = 6;
  std::size_t state_cap = 1'000'000;
  unsigned jobs = 1;
  // Disagreeing sequents to keep per check.
  std::size_t max_examples = 10;
};

struct CrossvalRow {
  std::string logic;
  std::string check;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::vector<std::string> examples;
};

struct CrossvalReport {
  std::size_t sequents = 0;
  std::vector<CrossvalRow> rows;

  std::size_t disagreements() const {
    std::size_t n = 0;
    for (const auto& r : rows) n += r.disagree;
    return n;
  }
};

namespace internal {

struct LogicTally {
  CrossvalRow prove_decide;
  CrossvalRow brute_prove;
  CrossvalRow decide_bounded;
};

template <class Op>
bool BoundedAgrees(const Sequent& s, const Decision& d, std::size_t max_len) {
  const TermPair<Op> terms = InterpretSequent<Op>(s);
  const bool bounded = BoundedInclusion(terms.lhs, terms.rhs, max_len);
  if (d.derivable) return bounded;
  if (d.counterexample && d.counterexample->size() <= max_len) return !bounded;
  return true;
}

inline void Record(CrossvalRow& row, bool ok, const std::string& what,
                   std::size_t max_examples) {
  if (ok) {
    ++row.agree;
    return;
  }
  ++row.disagree;
  if (row.examples.size() < max_examples) row.examples.push_back(what);
}

}  // namespace internal

inline CrossvalReport RunCrossval(const CrossvalOptions& options) {
  const std::vector<Sequent> sequents =
      EnumerateSequents(options.variables, options.max_total_size);
  const std::size_t nl = options.logics.size();
  const unsigned jobs = options.jobs == 0 ? 1 : options.jobs;

  struct Shard {
    std::vector<internal::LogicTally> tallies;
    CrossvalRow fragment;
  };
  std::vector<Shard> shards(jobs);
  for (Shard& sh : shards) sh.tallies.resize(nl);

  const bool fragment_check =
      nl == 2 && options.logics[0] == Logic::kKL && options.logics[1] == Logic::kKLPlus;

  auto work = [&](unsigned shard_index) {
    Shard& sh = shards[shard_index];
    for (std::size_t i = shard_index; i < sequents.size(); i += jobs) {
      const Sequent& s = sequents[i];
      const std::string text = ToString(s);
      std::vector<bool> proved(nl);
      for (std::size_t l = 0; l < nl; ++l) {
        const Logic logic = options.logics[l];
        auto& t = sh.tallies[l];
        const bool p =
            Prove(logic, s, ProveOptions{options.state_cap}).has_value();
        const Decision d = Decide(logic, s, AutomataOptions{options.state_cap});
        proved[l] = p;
        internal::Record(t.prove_decide, p == d.derivable,
                         text + (p ? "  (proved, semantically invalid)"
                                   : "  (no cut-free proof, semantically valid)"),
                         options.max_examples);
        const bool brute = BruteProve(logic, s, 2 * s.size());
        internal::Record(t.brute_prove, brute == p, text, options.max_examples);
        const bool bounded_ok =
            logic == Logic::kKL
                ? internal::BoundedAgrees<StarOp>(s, d, options.max_len)
                : internal::BoundedAgrees<SharpOp>(s, d, options.max_len);
        internal::Record(t.decide_bounded, bounded_ok, text, options.max_examples);
      }
      if (fragment_check) {
        internal::Record(sh.fragment, !proved[1] || proved[0], text,
                         options.max_examples);
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  auto merge = [&](CrossvalRow into, const CrossvalRow& from) {
    into.agree += from.agree;
    into.disagree += from.disagree;
    for (const auto& e : from.examples) {
      if (into.examples.size() < options.max_examples) into.examples.push_back(e);
    }
    return into;
  };

  CrossvalReport report;
  report.sequents = sequents.size();
  for (std::size_t l = 0; l < nl; ++l) {
    const std::string name(LogicName(options.logics[l]));
    CrossvalRow pd{name, "prove = decide", 0, 0, {}};
    CrossvalRow bp{name, "brute = prove", 0, 0, {}};
    CrossvalRow db{name, "decide ~ bounded", 0, 0, {}};
    for (const Shard& sh : shards) {
      pd = merge(pd, sh.tallies[l].prove_decide);
      bp = merge(bp, sh.tallies[l].brute_prove);
      db = merge(db, sh.tallies[l].decide_bounded);
    }
    report.rows.push_back(pd);
    report.rows.push_back(bp);
    report.rows.push_back(db);
  }
  if (fragment_check) {
    CrossvalRow fr{"kl+/kl", "kl+ proof => kl proof", 0, 0, {}};
    for (const Shard& sh : shards) fr = merge(fr, sh.fragment);
    report.rows.push_back(fr);
  }
  return report;
}

}  // namespace kl

#endif  // KL_CROSSVAL_HPP_
