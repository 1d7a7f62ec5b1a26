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

// Kleene-algebra terms (with star) and Kleene-plus terms (with #), the
// homomorphic interpretation of formulas into them, and the translations
// i : star-terms -> plus-terms and j : plus-terms -> star-terms.
//
// Term syntax: identifiers, 0, 1, infix '+' and '.', postfix '*' for star
// or '^' for #. Precedence: postfix > '.' > '+'.

#ifndef KL_ALGEBRA_HPP_
#define KL_ALGEBRA_HPP_

#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kl/calculus.hpp"
#include "kl/error.hpp"
#include "kl/syntax.hpp"

namespace kl {

// Tag for Kleene star: any number of iterations, including none.
struct StarOp {
  static constexpr char kSymbol = '*';
  static constexpr bool kAllowsEmpty = true;
};

// Tag for Kleene plus: one or more iterations.
struct SharpOp {
  static constexpr char kSymbol = '^';
  static constexpr bool kAllowsEmpty = false;
};

template <class Op>
class Term {
 public:
  enum class Kind : std::uint8_t { kVar, kZero, kOne, kPlus, kDot, kIter };
  using IterOp = Op;

  static Term Var(std::string name) {
    return Term(Kind::kVar, std::move(name), nullptr, nullptr);
  }
  static Term Zero() { return Term(Kind::kZero, {}, nullptr, nullptr); }
  static Term One() { return Term(Kind::kOne, {}, nullptr, nullptr); }
  static Term Plus(const Term& a, const Term& b) {
    return Term(Kind::kPlus, {}, a.node_, b.node_);
  }
  static Term Dot(const Term& a, const Term& b) {
    return Term(Kind::kDot, {}, a.node_, b.node_);
  }
  static Term Iter(const Term& body) {
    return Term(Kind::kIter, {}, body.node_, nullptr);
  }

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  const std::string& name() const { return node_->name; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }
  Term body() const { return Term(node_->left); }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Term& a, const Term& b) {
    return Equal(a.node_.get(), b.node_.get());
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t size;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  Term(Kind kind, std::string name, std::shared_ptr<const Node> left,
       std::shared_ptr<const Node> right) {
    std::size_t size = 1 + (left ? left->size : 0) + (right ? right->size : 0);
    node_ = std::make_shared<const Node>(
        Node{kind, std::move(name), std::move(left), std::move(right), size});
  }

  static bool Equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a == nullptr || b == nullptr) return false;
    return a->kind == b->kind && a->size == b->size && a->name == b->name &&
           Equal(a->left.get(), b->left.get()) &&
           Equal(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

using KTerm = Term<StarOp>;
using PlusTerm = Term<SharpOp>;

inline KTerm Star(const KTerm& t) { return KTerm::Iter(t); }
inline PlusTerm Sharp(const PlusTerm& t) { return PlusTerm::Iter(t); }

template <class Op>
void CollectVariables(const Term<Op>& t, std::set<std::string>& out) {
  using K = typename Term<Op>::Kind;
  switch (t.kind()) {
    case K::kVar: out.insert(t.name()); return;
    case K::kZero:
    case K::kOne: return;
    case K::kIter: CollectVariables(t.body(), out); return;
    case K::kPlus:
    case K::kDot:
      CollectVariables(t.left(), out);
      CollectVariables(t.right(), out);
      return;
  }
}

template <class Op>
std::set<std::string> Variables(const Term<Op>& t) {
  std::set<std::string> out;
  CollectVariables(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace internal {

template <class Op>
int TermPrecedence(const Term<Op>& t) {
  using K = typename Term<Op>::Kind;
  switch (t.kind()) {
    case K::kPlus: return 0;
    case K::kDot: return 1;
    case K::kIter: return 2;
    default: return 3;
  }
}

template <class Op>
void PrintTerm(const Term<Op>& t, int min_precedence, std::string& out) {
  using K = typename Term<Op>::Kind;
  const bool parens = TermPrecedence(t) < min_precedence;
  if (parens) out += '(';
  switch (t.kind()) {
    case K::kVar: out += t.name(); break;
    case K::kZero: out += '0'; break;
    case K::kOne: out += '1'; break;
    case K::kPlus:
      PrintTerm(t.left(), 0, out);
      out += '+';
      PrintTerm(t.right(), 1, out);
      break;
    case K::kDot:
      PrintTerm(t.left(), 1, out);
      out += '.';
      PrintTerm(t.right(), 2, out);
      break;
    case K::kIter:
      PrintTerm(t.body(), 2, out);
      out += Op::kSymbol;
      break;
  }
  if (parens) out += ')';
}

template <class Op>
class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term<Op> ParseToEnd() {
    Term<Op> t = ParsePlus();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const { throw ParseError(what, pos_); }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term<Op> ParsePlus() {
    Term<Op> t = ParseDot();
    while (Accept('+')) t = Term<Op>::Plus(t, ParseDot());
    return t;
  }

  Term<Op> ParseDot() {
    Term<Op> t = ParsePostfix();
    while (Accept('.')) t = Term<Op>::Dot(t, ParsePostfix());
    return t;
  }

  Term<Op> ParsePostfix() {
    Term<Op> t = ParseAtom();
    for (;;) {
      SkipSpace();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c == Op::kSymbol) {
        ++pos_;
        t = Term<Op>::Iter(t);
      } else if (c == '*' || c == '^') {
        Fail(std::string("operator '") + c + "' is not available in this term language");
      } else {
        break;
      }
    }
    return t;
  }

  Term<Op> ParseAtom() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("expected a term, found end of input");
    const char c = text_[pos_];
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      return Term<Op>::Var(std::string(text_.substr(start, pos_ - start)));
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() &&
          std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        Fail("malformed constant");
      }
      return c == '0' ? Term<Op>::Zero() : Term<Op>::One();
    }
    if (c == '(') {
      ++pos_;
      Term<Op> t = ParsePlus();
      if (!Accept(')')) Fail("expected ')'");
      return t;
    }
    Fail("expected a term, found '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace internal

template <class Op>
std::string ToString(const Term<Op>& t) {
  std::string out;
  internal::PrintTerm(t, 0, out);
  return out;
}

inline KTerm ParseKTerm(std::string_view text) {
  return internal::TermParser<StarOp>(text).ParseToEnd();
}

inline PlusTerm ParsePlusTerm(std::string_view text) {
  return internal::TermParser<SharpOp>(text).ParseToEnd();
}

// ---------------------------------------------------------------------------
// Interpretation of formulas (identity valuation on variables)

// '?' becomes the iteration operator of `Op`: star for KL, # for KL+.
template <class Op>
Term<Op> Interpret(const Formula& f) {
  using T = Term<Op>;
  switch (f.kind()) {
    case Formula::Kind::kVar: return T::Var(f.name());
    case Formula::Kind::kZero: return T::Zero();
    case Formula::Kind::kOne: return T::One();
    case Formula::Kind::kOr:
      return T::Plus(Interpret<Op>(f.left()), Interpret<Op>(f.right()));
    case Formula::Kind::kFuse:
      return T::Dot(Interpret<Op>(f.left()), Interpret<Op>(f.right()));
    case Formula::Kind::kQuery: return T::Iter(Interpret<Op>(f.body()));
  }
  return T::Zero();
}

using AnyTerm = std::variant<KTerm, PlusTerm>;

inline AnyTerm Interpret(const Formula& f, Logic logic) {
  if (logic == Logic::kKL) return Interpret<StarOp>(f);
  return Interpret<SharpOp>(f);
}

template <class Op>
struct TermPair {
  Term<Op> lhs;
  Term<Op> rhs;
};

// Antecedent folded with '.' from the left (empty antecedent -> 1).
template <class Op>
TermPair<Op> InterpretSequent(const Sequent& s) {
  using T = Term<Op>;
  T lhs = T::One();
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    T t = Interpret<Op>(s.antecedent[i]);
    lhs = i == 0 ? t : T::Dot(lhs, t);
  }
  return {lhs, Interpret<Op>(s.succedent)};
}

// ---------------------------------------------------------------------------
// Translations between star-terms and plus-terms

// i(x*) = 1 + i(x)#; homomorphic on everything else.
inline PlusTerm MapI(const KTerm& t) {
  using K = KTerm::Kind;
  switch (t.kind()) {
    case K::kVar: return PlusTerm::Var(t.name());
    case K::kZero: return PlusTerm::Zero();
    case K::kOne: return PlusTerm::One();
    case K::kPlus: return PlusTerm::Plus(MapI(t.left()), MapI(t.right()));
    case K::kDot: return PlusTerm::Dot(MapI(t.left()), MapI(t.right()));
    case K::kIter: return PlusTerm::Plus(PlusTerm::One(), Sharp(MapI(t.body())));
  }
  return PlusTerm::Zero();
}

// j(x#) = j(x) . j(x)*; homomorphic on everything else.
inline KTerm MapJ(const PlusTerm& t) {
  using K = PlusTerm::Kind;
  switch (t.kind()) {
    case K::kVar: return KTerm::Var(t.name());
    case K::kZero: return KTerm::Zero();
    case K::kOne: return KTerm::One();
    case K::kPlus: return KTerm::Plus(MapJ(t.left()), MapJ(t.right()));
    case K::kDot: return KTerm::Dot(MapJ(t.left()), MapJ(t.right()));
    case K::kIter: {
      const KTerm body = MapJ(t.body());
      return KTerm::Dot(body, Star(body));
    }
  }
  return KTerm::Zero();
}

}  // namespace kl

#endif  // KL_ALGEBRA_HPP_
