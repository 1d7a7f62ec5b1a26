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

// Proof tree serialization: JSON documents and an indented text rendering.
//
// JSON shape:
//   {"rule": "FuseR", "conclusion": "a, b |- a . b", "premises": [ ... ],
//    "bindings": {"Gamma": ["a"], "Delta": ["b"], "alpha": "a", "beta": "b"}}
// "bindings" is optional on input; when absent it is recovered from the
// conclusion and premise conclusions.

#ifndef KL_PROOF_IO_HPP_
#define KL_PROOF_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kl/calculus.hpp"
#include "kl/syntax.hpp"

namespace kl {

class ProofFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace internal {

inline nlohmann::ordered_json SeqToJson(const std::vector<Formula>& seq) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Formula& f : seq) out.push_back(ToString(f));
  return out;
}

inline std::vector<Formula> SeqFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw ProofFormatError("binding sequence must be an array");
  std::vector<Formula> out;
  for (const auto& item : j) out.push_back(ParseFormula(item.get<std::string>()));
  return out;
}

inline nlohmann::ordered_json BindingsToJson(const Bindings& b) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  if (!b.ctx_gamma.empty()) out["Gamma"] = SeqToJson(b.ctx_gamma);
  if (!b.ctx_delta.empty()) out["Delta"] = SeqToJson(b.ctx_delta);
  if (!b.ctx_theta.empty()) out["Theta"] = SeqToJson(b.ctx_theta);
  if (b.alpha) out["alpha"] = ToString(*b.alpha);
  if (b.beta) out["beta"] = ToString(*b.beta);
  if (b.gamma) out["gamma"] = ToString(*b.gamma);
  return out;
}

inline Bindings BindingsFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ProofFormatError("\"bindings\" must be an object");
  Bindings b;
  if (j.contains("Gamma")) b.ctx_gamma = SeqFromJson(j["Gamma"]);
  if (j.contains("Delta")) b.ctx_delta = SeqFromJson(j["Delta"]);
  if (j.contains("Theta")) b.ctx_theta = SeqFromJson(j["Theta"]);
  if (j.contains("alpha")) b.alpha = ParseFormula(j["alpha"].get<std::string>());
  if (j.contains("beta")) b.beta = ParseFormula(j["beta"].get<std::string>());
  if (j.contains("gamma")) b.gamma = ParseFormula(j["gamma"].get<std::string>());
  return b;
}

}  // namespace internal

inline nlohmann::ordered_json ToJson(const ProofTree& tree) {
  nlohmann::ordered_json out;
  out["rule"] = std::string(RuleName(tree.rule));
  out["conclusion"] = ToString(tree.conclusion);
  out["premises"] = nlohmann::ordered_json::array();
  for (const ProofTree& p : tree.premises) out["premises"].push_back(ToJson(p));
  out["bindings"] = internal::BindingsToJson(tree.bindings);
  return out;
}

// Throws ProofFormatError on structural problems and ParseError on bad
// formula text. A node whose bindings cannot be recovered keeps empty
// bindings, which CheckProof then reports.
inline ProofTree ProofFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw ProofFormatError("proof node must be an object");
  if (!j.contains("rule") || !j["rule"].is_string()) {
    throw ProofFormatError("proof node needs a string \"rule\"");
  }
  if (!j.contains("conclusion") || !j["conclusion"].is_string()) {
    throw ProofFormatError("proof node needs a string \"conclusion\"");
  }
  const std::string name = j["rule"].get<std::string>();
  const auto rule = RuleFromName(name);
  if (!rule) throw ProofFormatError("unknown rule \"" + name + "\"");
  ProofTree tree{ParseSequent(j["conclusion"].get<std::string>()), *rule, {}, {}};
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) {
      throw ProofFormatError("\"premises\" must be an array");
    }
    for (const auto& p : j["premises"]) tree.premises.push_back(ProofFromJson(p));
  }
  if (j.contains("bindings")) {
    tree.bindings = internal::BindingsFromJson(j["bindings"]);
  } else {
    std::vector<Sequent> premises;
    for (const ProofTree& p : tree.premises) premises.push_back(p.conclusion);
    if (auto b = InferBindings(tree.rule, tree.conclusion, premises)) {
      tree.bindings = std::move(*b);
    }
  }
  return tree;
}

inline ProofTree ParseProofJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProofFormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return ProofFromJson(j);
  } catch (const nlohmann::json::exception& e) {
    throw ProofFormatError(std::string("malformed proof document: ") + e.what());
  }
}

namespace internal {

inline void RenderText(const ProofTree& tree, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += ToString(tree.conclusion);
  out += "   (";
  out += RuleName(tree.rule);
  out += ")\n";
  for (const ProofTree& p : tree.premises) RenderText(p, depth + 1, out);
}

}  // namespace internal

// Conclusion first, each premise indented one level below its conclusion.
inline std::string RenderText(const ProofTree& tree) {
  std::string out;
  internal::RenderText(tree, 0, out);
  return out;
}

}  // namespace kl

#endif  // KL_PROOF_IO_HPP_
