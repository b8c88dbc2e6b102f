// The shared expression grammar: juxtaposition or `*` for products, `^k`
// for powers, parentheses, `inner(w)`, `hol(w, aut)`, `tower(n, w, lower)`.
// The identity word is spelled `e`. Words, relators and CLI expressions all
// parse through here.

#ifndef HOLKIT_EXPR_HPP_
#define HOLKIT_EXPR_HPP_

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "holkit/extensions.hpp"
#include "holkit/morphisms.hpp"
#include "holkit/words.hpp"

namespace holkit {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { atom, number, product, pow, call };

  Kind kind = Kind::atom;
  std::string name;           // atom name or call name (inner/hol/tower)
  long long number = 0;       // number atoms (tower level)
  std::vector<ExprPtr> args;  // product factors / call arguments / pow base
  long long exponent = 1;     // pow
  size_t pos = 0;             // character offset, for diagnostics
};

ExprPtr parse_expr(const std::string& text);
std::string print_expr(const Expr& e);

/// Parses a word over the given alphabet; names must be alphabet generators
/// (plus `e`). Throws parse_error on unknown names or non-word syntax.
Word parse_word(const std::string& text, const Alphabet& alphabet);

/// Like parse_word but with `u = v` sugar for the relator u v^-1.
Word parse_relator(const std::string& text, const Alphabet& alphabet);

/// A typed expression value. Products only combine values of one kind.
using Value = std::variant<Word, Automorphism, HolElement, TowerElement>;

std::string value_kind(const Value& v);
std::string to_string(const Value& v);

/// Evaluates a parsed expression. Automorphism atoms are the Aut(F_2) basis
/// constants p, x, y, ta, tb, t1, id; word atoms are a, b (F_2) or x1..xn;
/// `e` is the empty word. Throws parse_error on type mismatches.
Value evaluate_expr(const Expr& e);
Value evaluate_expr(const std::string& text);

Word evaluate_word(const Expr& e, const Alphabet& alphabet);

}  // namespace holkit

#endif  // HOLKIT_EXPR_HPP_
