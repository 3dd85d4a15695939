#pragma once

/**
 * @file expr.hpp
 * @brief A small language for quaternion-valued functions of a real t.
 *
 * Grammar (lowest to highest precedence):
 *
 *     expr    := term   (('+' | '-') term)*
 *     term    := unary  (('*' | '/') unary)*
 *     unary   := '-' unary | power
 *     power   := atom   ('^' INTEGER)*
 *     atom    := NUMBER | 'i' | 'j' | 'k' | 't'
 *              | '(' expr ')' | FUNC '(' expr ')'
 *     FUNC    := 'exp' | 'sin' | 'cos'
 *
 * Products keep their written order. a/b means a·b⁻¹. There is no implicit
 * multiplication: "2i" is an error, write "2*i".
 */

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "quatode/qmatrix.hpp"
#include "quatode/quaternion.hpp"

namespace quatode {

class Expr {
 public:
  enum class Kind { number, unit_i, unit_j, unit_k, variable, negate, add, sub, mul, div, pow, call };
  enum class Function { exp, sin, cos };

  struct Node;

  /// Literal constructors, mostly for tests and programmatic construction.
  static Expr number(double v);
  static Expr unit(char which);  // 'i', 'j' or 'k'
  static Expr variable();
  static Expr negate(Expr operand);
  static Expr binary(Kind op, Expr lhs, Expr rhs);
  static Expr power(Expr base, unsigned exponent);
  static Expr call(Function fn, Expr arg);

  Kind kind() const;
  double value() const;        // number
  unsigned exponent() const;   // pow
  Function function() const;   // call
  const Expr& lhs() const;     // negate/call operand, binary lhs, pow base
  const Expr& rhs() const;     // binary rhs

  /// True if the tree mentions t anywhere.
  bool depends_on_t() const;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Kind kind;
  double value = 0.0;
  unsigned exponent = 0;
  Function function = Function::exp;
  std::vector<Expr> children;
};

/// Throws ParseError (with the offending position) on bad syntax, unknown
/// identifiers, and non-integer or negative exponents.
Expr parse(std::string_view src);

/// Throws EvalError for sin/cos of a non-real argument and DomainError for
/// division by zero.
Quaternion eval(const Expr& e, double t);

/// Fully parenthesised text that parse() maps back to an equivalent tree.
std::string render(const Expr& e);

using ExprVector = std::vector<Expr>;

struct ExprMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Expr> entries;  // row-major

  const Expr& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  bool depends_on_t() const;
};

/// Parses a row-major grid of sources. Parse errors name the cell.
ExprMatrix parse_matrix(const std::vector<std::vector<std::string>>& cells);
ExprVector parse_vector(const std::vector<std::string>& cells);

/// Cellwise evaluation; errors carry the cell coordinates.
QMatrix eval_matrix(const ExprMatrix& m, double t);
QVector eval_vector(const ExprVector& v, double t);

/// Parses and evaluates a t-free quaternion literal such as "1-2*j".
Quaternion parse_quaternion(std::string_view src);

}  // namespace quatode
