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

// The klc command line: decide, prove, check, translate, crossval.
//
// Exit status: 0 derivable / proof valid / success, 1 not derivable / proof
// invalid / disagreements found, 2 usage or parse error, 3 resource cap hit.

#ifndef KL_CLI_HPP_
#define KL_CLI_HPP_

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kl/algebra.hpp"
#include "kl/automata.hpp"
#include "kl/calculus.hpp"
#include "kl/crossval.hpp"
#include "kl/error.hpp"
#include "kl/proof_io.hpp"
#include "kl/syntax.hpp"

namespace kl::cli {

inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

enum class Command { kDecide, kProve, kCheck, kTranslate, kCrossval };
enum class Format { kText, kJson };

struct RunConfig {
  Command command = Command::kDecide;
  std::string logic_name;  // empty: not given
  Format format = Format::kText;
  std::string input;
  std::string file;
  bool allow_cut = false;
  std::string map = "interpret";
  std::string dot_file;
  std::size_t max_size = 6;
  std::size_t max_len = 6;
  std::size_t state_cap = 1'000'000;
  std::string variables = "a,b";
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace internal {

inline Logic ResolveLogic(const RunConfig& config, std::ostream& err) {
  if (config.logic_name.empty()) {
    err << "note: --logic not given, using kl\n";
    return Logic::kKL;
  }
  if (config.logic_name == "kl") return Logic::kKL;
  if (config.logic_name == "kl+") return Logic::kKLPlus;
  throw UsageError("unknown logic '" + config.logic_name + "' (expected kl or kl+)");
}

inline std::string ReadInput(const RunConfig& config) {
  if (!config.file.empty() && !config.input.empty()) {
    throw UsageError("give either an inline argument or --file, not both");
  }
  if (config.file.empty()) {
    if (config.input.empty()) throw UsageError("missing input");
    return config.input;
  }
  if (config.file == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(config.file, std::ios::binary);
  if (!in) throw UsageError("cannot read " + config.file);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  // Formula inputs from files may carry a trailing newline.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

inline nlohmann::ordered_json WordJson(const std::optional<Word>& w) {
  if (!w) return nullptr;
  return nlohmann::ordered_json(*w);
}

inline void WriteDot(const std::string& path, const Nfa& lhs, const Nfa& rhs) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << ToDot(lhs, "lhs") << ToDot(rhs, "rhs");
}

inline int RunDecide(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Logic logic = ResolveLogic(config, err);
  const Sequent s = ParseSequent(ReadInput(config));
  const AutomataOptions options{config.state_cap};
  Decision d;
  auto run = [&](const auto& compiled) {
    if (!config.dot_file.empty()) WriteDot(config.dot_file, compiled.lhs, compiled.rhs);
    InclusionResult r = Includes(compiled.lhs, compiled.rhs, options);
    d = Decision{r.included, std::move(r.counterexample)};
  };
  if (logic == Logic::kKL) {
    run(CompileSequent<StarOp>(s));
  } else {
    run(CompileSequent<SharpOp>(s));
  }
  if (config.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["logic"] = std::string(LogicName(logic));
    j["sequent"] = ToString(s);
    j["derivable"] = d.derivable;
    j["counterexample"] = WordJson(d.counterexample);
    out << j.dump() << "\n";
  } else if (d.derivable) {
    out << "derivable\n";
  } else if (d.counterexample) {
    out << "not derivable (counterexample: " << WordToString(*d.counterexample) << ")\n";
  } else {
    out << "not derivable\n";
  }
  return d.derivable ? kExitPositive : kExitNegative;
}

inline int RunProve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Logic logic = ResolveLogic(config, err);
  const Sequent s = ParseSequent(ReadInput(config));
  const auto proof = Prove(logic, s, ProveOptions{config.state_cap});
  if (config.format == Format::kJson) {
    out << (proof ? ToJson(*proof).dump() : std::string("null")) << "\n";
  } else if (proof) {
    out << RenderText(*proof);
  } else {
    out << "no proof\n";
  }
  return proof ? kExitPositive : kExitNegative;
}

inline int RunCheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Logic logic = ResolveLogic(config, err);
  const ProofTree tree = ParseProofJson(ReadInput(config));
  const CheckResult result = CheckProof(logic, tree, config.allow_cut);
  if (config.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["ok"] = result.ok();
    j["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : result.violations) {
      j["violations"].push_back({{"path", v.path},
                                 {"rule", std::string(RuleName(v.rule))},
                                 {"conclusion", ToString(v.conclusion)},
                                 {"reason", v.reason}});
    }
    out << j.dump() << "\n";
  } else if (result.ok()) {
    out << "ok\n";
  } else {
    for (const Violation& v : result.violations) {
      out << "violation at " << v.path << " (" << RuleName(v.rule) << ", "
          << ToString(v.conclusion) << "): " << v.reason << "\n";
    }
  }
  return result.ok() ? kExitPositive : kExitNegative;
}

inline int RunTranslate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string text = ReadInput(config);
  std::string result;
  if (config.map == "interpret") {
    const Logic logic = ResolveLogic(config, err);
    if (text.find("|-") != std::string::npos) {
      const Sequent s = ParseSequent(text);
      if (logic == Logic::kKL) {
        auto t = InterpretSequent<StarOp>(s);
        result = ToString(t.lhs) + " <= " + ToString(t.rhs);
      } else {
        auto t = InterpretSequent<SharpOp>(s);
        result = ToString(t.lhs) + " <= " + ToString(t.rhs);
      }
    } else {
      const Formula f = ParseFormula(text);
      result = logic == Logic::kKL ? ToString(Interpret<StarOp>(f))
                                   : ToString(Interpret<SharpOp>(f));
    }
  } else if (config.map == "i") {
    result = ToString(MapI(ParseKTerm(text)));
  } else if (config.map == "j") {
    result = ToString(MapJ(ParsePlusTerm(text)));
  } else {
    throw UsageError("unknown --map '" + config.map + "' (expected interpret, i or j)");
  }
  if (config.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["map"] = config.map;
    j["input"] = text;
    j["output"] = result;
    out << j.dump() << "\n";
  } else {
    out << result << "\n";
  }
  return kExitPositive;
}

inline std::vector<std::string> SplitVariables(const std::string& list) {
  std::vector<std::string> vars;
  std::stringstream ss(list);
  std::string v;
  while (std::getline(ss, v, ',')) {
    if (v.empty()) continue;
    const Formula f = ParseFormula(v);
    if (!f.is(Formula::Kind::kVar)) throw UsageError("bad variable name '" + v + "'");
    vars.push_back(v);
  }
  if (vars.empty()) throw UsageError("--vars needs at least one variable");
  return vars;
}

inline int RunCrossval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CrossvalOptions options;
  if (config.logic_name == "both") {
    options.logics = {Logic::kKL, Logic::kKLPlus};
  } else {
    options.logics = {ResolveLogic(config, err)};
  }
  options.variables = SplitVariables(config.variables);
  options.max_total_size = config.max_size;
  options.max_len = config.max_len;
  options.state_cap = config.state_cap;
  options.jobs = config.jobs;
  const CrossvalReport report = RunCrossval(options);

  if (config.format == Format::kJson) {
    nlohmann::ordered_json j;
    j["sequents"] = report.sequents;
    j["max_size"] = config.max_size;
    j["max_len"] = config.max_len;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
      j["rows"].push_back({{"logic", r.logic},
                           {"check", r.check},
                           {"agree", r.agree},
                           {"disagree", r.disagree},
                           {"examples", r.examples}});
    }
    j["disagreements"] = report.disagreements();
    out << j.dump() << "\n";
  } else {
    out << "sequents: " << report.sequents << " (variables " << config.variables
        << ", max size " << config.max_size << ", max len " << config.max_len
        << ")\n";
    out << std::left << std::setw(8) << "logic" << std::setw(24) << "check"
        << std::right << std::setw(10) << "agree" << std::setw(10) << "disagree"
        << "\n";
    for (const auto& r : report.rows) {
      out << std::left << std::setw(8) << r.logic << std::setw(24) << r.check
          << std::right << std::setw(10) << r.agree << std::setw(10) << r.disagree
          << "\n";
    }
    for (const auto& r : report.rows) {
      for (const auto& e : r.examples) {
        out << "  disagreement [" << r.logic << ", " << r.check << "]: " << e << "\n";
      }
    }
    out << (report.disagreements() == 0 ? "all checks agree\n"
                                        : "DISAGREEMENTS FOUND\n");
  }
  return report.disagreements() == 0 ? kExitPositive : kExitNegative;
}

}  // namespace internal

inline int Execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kDecide: return internal::RunDecide(config, out, err);
      case Command::kProve: return internal::RunProve(config, out, err);
      case Command::kCheck: return internal::RunCheck(config, out, err);
      case Command::kTranslate: return internal::RunTranslate(config, out, err);
      case Command::kCrossval: return internal::RunCrossval(config, out, err);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ProofFormatError& e) {
    err << "proof format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceExhausted& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}

// Parses `args` (without the program name) and runs the command.
inline int Run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  RunConfig config;
  CLI::App app{"klc: decision procedures and proof search for KL and KL+"};
  app.require_subcommand(1);
  std::string format = "text";

  auto common = [&](CLI::App* sub, bool takes_input) {
    sub->add_option("--logic", config.logic_name, "kl or kl+ (default kl)");
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--state-cap", config.state_cap, "state cap for search and automata")
        ->check(CLI::PositiveNumber);
    if (takes_input) {
      sub->add_option("input", config.input, "inline input");
      sub->add_option("--file", config.file, "read input from PATH ('-' for stdin)");
    }
  };

  auto* decide = app.add_subcommand("decide", "decide a sequent semantically");
  common(decide, true);
  decide->add_option("--dot", config.dot_file, "write both automata as DOT to FILE");
  auto* prove = app.add_subcommand("prove", "search for a cut-free proof");
  common(prove, true);
  auto* check = app.add_subcommand("check", "check a JSON proof tree");
  common(check, true);
  check->add_flag("--allow-cut", config.allow_cut, "accept Cut nodes");
  auto* translate = app.add_subcommand("translate", "apply interpret, i or j");
  common(translate, true);
  translate->add_option("--map", config.map, "interpret, i or j");
  auto* crossval = app.add_subcommand("crossval", "enumeration agreement suite");
  common(crossval, false);
  crossval->add_option("--max-size", config.max_size, "max total sequent size")
      ->check(CLI::PositiveNumber);
  crossval->add_option("--max-len", config.max_len, "word length for the language oracle")
      ->check(CLI::PositiveNumber);
  crossval->add_option("--vars", config.variables, "comma-separated variables");
  crossval->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"klc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPositive;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPositive;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  config.format = format == "json" ? Format::kJson : Format::kText;
  if (decide->parsed()) config.command = Command::kDecide;
  if (prove->parsed()) config.command = Command::kProve;
  if (check->parsed()) config.command = Command::kCheck;
  if (translate->parsed()) config.command = Command::kTranslate;
  if (crossval->parsed()) config.command = Command::kCrossval;
  return Execute(config, out, err);
}

}  // namespace kl::cli

#endif  // KL_CLI_HPP_
