#pragma once

// Small arithmetic expression language for fixtures and the CLI:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*      division by constants only
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := number | identifier | '(' expr ')'
// Products keep their written order, so the same tree evaluates in
// commutative and noncommutative algebras.

#include "slodowy/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace slodowy {

struct Expr {
  enum class Kind { num, var, add, mul, neg, pow };
  Kind kind = Kind::num;
  Rat num;
  std::string name;
  std::vector<Expr> kids;  // add: summands, mul: factors in order, neg/pow: one
  int exponent = 1;
};

/// Throws InputError with the offending position on malformed text.
Expr parse_expr(const std::string& text);

/// Identifiers that occur in the tree.
std::vector<std::string> expr_variables(const Expr& e);

/// Evaluates bottom-up. T needs +, -, T * Rat and a product supplied by mul.
template <class T>
T eval_expr(const Expr& e, const std::function<T(const std::string&)>& var,
            const std::function<T(const Rat&)>& scalar, const std::function<T(const T&, const T&)>& mul) {
  switch (e.kind) {
    case Expr::Kind::num:
      return scalar(e.num);
    case Expr::Kind::var:
      return var(e.name);
    case Expr::Kind::add: {
      T acc = eval_expr<T>(e.kids[0], var, scalar, mul);
      for (std::size_t k = 1; k < e.kids.size(); ++k) acc = acc + eval_expr<T>(e.kids[k], var, scalar, mul);
      return acc;
    }
    case Expr::Kind::mul: {
      T acc = eval_expr<T>(e.kids[0], var, scalar, mul);
      for (std::size_t k = 1; k < e.kids.size(); ++k) acc = mul(acc, eval_expr<T>(e.kids[k], var, scalar, mul));
      return acc;
    }
    case Expr::Kind::neg:
      return eval_expr<T>(e.kids[0], var, scalar, mul) * Rat(-1);
    case Expr::Kind::pow: {
      const T base = eval_expr<T>(e.kids[0], var, scalar, mul);
      T acc = scalar(Rat(1));
      for (int k = 0; k < e.exponent; ++k) acc = mul(acc, base);
      return acc;
    }
  }
  return scalar(Rat(0));
}

}  // namespace slodowy
