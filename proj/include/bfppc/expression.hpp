#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bfppc/common.hpp"

namespace bfppc {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

// Arithmetic expression over the variables x1..xn and t.
//
// Supported syntax: numeric literals, + - * / ^ with the usual precedence
// (^ binds tightest and is right-associative, then unary minus, then * /,
// then + -), parentheses, and the unary functions sin, cos, exp, abs,
// tanh, ln.  Evaluation raises EvalError for ln of a non-positive argument
// and for division by zero; everything else follows IEEE semantics.
class Expression {
 public:
  Expression() = default;

  static Expression parse(std::string_view text);

  double eval(std::span<const double> states, double t = 0.0) const;

  // Highest state index referenced (1-based), 0 when no state appears.
  int max_state_index() const { return max_state_; }
  bool uses_time() const { return uses_time_; }
  bool empty() const { return root_ < 0; }

  // Prints a form that parses back to an identical tree.
  std::string str() const;

  bool operator==(const Expression& other) const;

 private:
  enum class Kind : std::uint8_t { Literal, State, Time, Unary, Binary };
  enum class Fn : std::uint8_t { Neg, Sin, Cos, Exp, Abs, Tanh, Ln };
  enum class Op : std::uint8_t { Add, Sub, Mul, Div, Pow };

  struct Node {
    Kind kind = Kind::Literal;
    double value = 0.0;  // Literal
    int index = 0;       // State, 1-based
    Fn fn = Fn::Neg;     // Unary
    Op op = Op::Add;     // Binary
    int a = -1;
    int b = -1;
  };

  friend class ExpressionParser;

  static bool node_equal(const Expression& x, int i, const Expression& y, int j);
  double eval_node(int id, std::span<const double> states, double t) const;
  void print_node(int id, std::string& out) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  int max_state_ = 0;
  bool uses_time_ = false;
};

}  // namespace bfppc
