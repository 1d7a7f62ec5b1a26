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

// Formulas and sequents of the language shared by KL and KL+.
//
// Concrete syntax:
//
//   formula ::= fuse ('|' fuse)*
//   fuse    ::= postfix ('.' postfix)*
//   postfix ::= atom '?'*
//   atom    ::= [a-z][a-zA-Z0-9_]* | '0' | '1' | '(' formula ')'
//   sequent ::= [formula (',' formula)*] '|-' formula
//
// Binary nodes are stored as parsed (left-associated); no flattening happens
// here.

#ifndef KL_SYNTAX_HPP_
#define KL_SYNTAX_HPP_

#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kl/error.hpp"

namespace kl {

namespace internal {

inline std::size_t HashCombine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace internal

// Immutable, structurally compared formula tree. Copies share nodes.
class Formula {
 public:
  enum class Kind : std::uint8_t { kVar, kZero, kOne, kOr, kFuse, kQuery };

  static Formula Var(std::string name) {
    return Formula(Kind::kVar, std::move(name), nullptr, nullptr);
  }
  static Formula Zero() { return Formula(Kind::kZero, {}, nullptr, nullptr); }
  static Formula One() { return Formula(Kind::kOne, {}, nullptr, nullptr); }
  static Formula Or(const Formula& left, const Formula& right) {
    return Formula(Kind::kOr, {}, left.node_, right.node_);
  }
  static Formula Fuse(const Formula& left, const Formula& right) {
    return Formula(Kind::kFuse, {}, left.node_, right.node_);
  }
  static Formula Query(const Formula& body) {
    return Formula(Kind::kQuery, {}, body.node_, nullptr);
  }

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  const std::string& name() const { return node_->name; }

  // Children. left() is also the body of a Query.
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  Formula body() const { return Formula(node_->left); }

  // Number of AST nodes.
  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b) {
    return Equal(a.node_.get(), b.node_.get());
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return Compare(a.node_.get(), b.node_.get());
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t size;
    std::size_t hash;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  Formula(Kind kind, std::string name, std::shared_ptr<const Node> left,
          std::shared_ptr<const Node> right) {
    std::size_t size = 1;
    std::size_t hash = std::hash<int>{}(static_cast<int>(kind));
    if (kind == Kind::kVar) {
      hash = internal::HashCombine(hash, std::hash<std::string>{}(name));
    }
    if (left) {
      size += left->size;
      hash = internal::HashCombine(hash, left->hash);
    }
    if (right) {
      size += right->size;
      hash = internal::HashCombine(hash, right->hash);
    }
    node_ = std::make_shared<const Node>(Node{kind, std::move(name),
                                              std::move(left),
                                              std::move(right), size, hash});
  }

  static bool Equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a == nullptr || b == nullptr) return false;
    if (a->hash != b->hash || a->size != b->size || a->kind != b->kind) {
      return false;
    }
    return a->name == b->name && Equal(a->left.get(), b->left.get()) &&
           Equal(a->right.get(), b->right.get());
  }

  static std::strong_ordering Compare(const Node* a, const Node* b) {
    if (a == b) return std::strong_ordering::equal;
    if (a == nullptr) return std::strong_ordering::less;
    if (b == nullptr) return std::strong_ordering::greater;
    if (auto c = a->kind <=> b->kind; c != 0) return c;
    if (auto c = a->name.compare(b->name); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = Compare(a->left.get(), b->left.get()); c != 0) return c;
    return Compare(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Gamma |- alpha. Antecedent order and multiplicity are significant.
struct Sequent {
  std::vector<Formula> antecedent;
  Formula succedent;

  // Total AST node count over antecedent and succedent.
  std::size_t size() const {
    std::size_t n = succedent.size();
    for (const Formula& f : antecedent) n += f.size();
    return n;
  }

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend std::strong_ordering operator<=>(const Sequent& a, const Sequent& b) {
    if (auto c = a.antecedent <=> b.antecedent; c != 0) return c;
    return a.succedent <=> b.succedent;
  }
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const {
    std::size_t h = s.succedent.hash();
    for (const Formula& f : s.antecedent) h = internal::HashCombine(h, f.hash());
    return internal::HashCombine(h, s.antecedent.size());
  }
};

inline void CollectVariables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kVar:
      out.insert(f.name());
      return;
    case Formula::Kind::kZero:
    case Formula::Kind::kOne:
      return;
    case Formula::Kind::kQuery:
      CollectVariables(f.body(), out);
      return;
    case Formula::Kind::kOr:
    case Formula::Kind::kFuse:
      CollectVariables(f.left(), out);
      CollectVariables(f.right(), out);
      return;
  }
}

inline std::set<std::string> Variables(const Sequent& s) {
  std::set<std::string> out;
  for (const Formula& f : s.antecedent) CollectVariables(f, out);
  CollectVariables(s.succedent, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace internal {

enum class TokenKind {
  kIdent,
  kZero,
  kOne,
  kOr,
  kFuse,
  kQuery,
  kLParen,
  kRParen,
  kComma,
  kTurnstile,
  kEnd,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

inline std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_')) {
        ++i;
      }
      tokens.push_back({TokenKind::kIdent,
                        std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '0': kind = TokenKind::kZero; break;
      case '1': kind = TokenKind::kOne; break;
      case '.': kind = TokenKind::kFuse; break;
      case '?': kind = TokenKind::kQuery; break;
      case '(': kind = TokenKind::kLParen; break;
      case ')': kind = TokenKind::kRParen; break;
      case ',': kind = TokenKind::kComma; break;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          kind = TokenKind::kTurnstile;
          ++i;
        } else {
          kind = TokenKind::kOr;
        }
        break;
      default:
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                             "'",
                         start);
    }
    ++i;
    // Digits must stand alone: "10" or "1a" is not a constant.
    if ((kind == TokenKind::kZero || kind == TokenKind::kOne) &&
        i < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      throw ParseError("malformed constant", start);
    }
    tokens.push_back({kind, std::string(text.substr(start, i - start)), start});
  }
  tokens.push_back({TokenKind::kEnd, {}, text.size()});
  return tokens;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : tokens_(Tokenize(text)) {}

  Formula ParseFormulaToEnd() {
    Formula f = ParseOr();
    Expect(TokenKind::kEnd, "end of input");
    return f;
  }

  Sequent ParseSequentToEnd() {
    Sequent s{{}, Formula::One()};
    if (Peek().kind != TokenKind::kTurnstile) {
      s.antecedent.push_back(ParseOr());
      while (Peek().kind == TokenKind::kComma) {
        ++pos_;
        s.antecedent.push_back(ParseOr());
      }
    }
    Expect(TokenKind::kTurnstile, "'|-'");
    s.succedent = ParseOr();
    if (Peek().kind == TokenKind::kTurnstile) {
      throw ParseError("more than one '|-'", Peek().position);
    }
    Expect(TokenKind::kEnd, "end of input");
    return s;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }

  void Expect(TokenKind kind, const char* what) {
    if (Peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + Found(), Peek().position);
    }
    ++pos_;
  }

  std::string Found() const {
    if (Peek().kind == TokenKind::kEnd) return ", found end of input";
    return ", found '" + Peek().text + "'";
  }

  Formula ParseOr() {
    Formula f = ParseFuse();
    while (Peek().kind == TokenKind::kOr) {
      ++pos_;
      f = Formula::Or(f, ParseFuse());
    }
    return f;
  }

  Formula ParseFuse() {
    Formula f = ParsePostfix();
    while (Peek().kind == TokenKind::kFuse) {
      ++pos_;
      f = Formula::Fuse(f, ParsePostfix());
    }
    return f;
  }

  Formula ParsePostfix() {
    Formula f = ParseAtom();
    while (Peek().kind == TokenKind::kQuery) {
      ++pos_;
      f = Formula::Query(f);
    }
    return f;
  }

  Formula ParseAtom() {
    const Token& t = Peek();
    switch (t.kind) {
      case TokenKind::kIdent:
        ++pos_;
        return Formula::Var(t.text);
      case TokenKind::kZero:
        ++pos_;
        return Formula::Zero();
      case TokenKind::kOne:
        ++pos_;
        return Formula::One();
      case TokenKind::kLParen: {
        ++pos_;
        Formula f = ParseOr();
        Expect(TokenKind::kRParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula" + Found(), t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace internal

// Throws ParseError on malformed or empty input.
inline Formula ParseFormula(std::string_view text) {
  return internal::FormulaParser(text).ParseFormulaToEnd();
}

inline Sequent ParseSequent(std::string_view text) {
  return internal::FormulaParser(text).ParseSequentToEnd();
}

// ---------------------------------------------------------------------------
// Printing

namespace internal {

inline int Precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kOr: return 0;
    case Formula::Kind::kFuse: return 1;
    case Formula::Kind::kQuery: return 2;
    default: return 3;
  }
}

inline void PrintFormula(const Formula& f, int min_precedence, std::string& out) {
  const bool parens = Precedence(f) < min_precedence;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::kVar: out += f.name(); break;
    case Formula::Kind::kZero: out += '0'; break;
    case Formula::Kind::kOne: out += '1'; break;
    case Formula::Kind::kOr:
      PrintFormula(f.left(), 0, out);
      out += " | ";
      PrintFormula(f.right(), 1, out);
      break;
    case Formula::Kind::kFuse:
      PrintFormula(f.left(), 1, out);
      out += " . ";
      PrintFormula(f.right(), 2, out);
      break;
    case Formula::Kind::kQuery:
      PrintFormula(f.body(), 2, out);
      out += '?';
      break;
  }
  if (parens) out += ')';
}

}  // namespace internal

// Minimal parentheses; the result re-parses to the same tree.
inline std::string ToString(const Formula& f) {
  std::string out;
  internal::PrintFormula(f, 0, out);
  return out;
}

inline std::string ToString(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i > 0) out += ", ";
    internal::PrintFormula(s.antecedent[i], 0, out);
  }
  out += s.antecedent.empty() ? "|- " : " |- ";
  internal::PrintFormula(s.succedent, 0, out);
  return out;
}

}  // namespace kl

#endif  // KL_SYNTAX_HPP_
