#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "streamcheck/core/data_type.hpp"
#include "streamcheck/core/message.hpp"

namespace streamcheck {

struct SourceLoc {
  std::size_t line = 0;  // 0 = unknown
  std::size_t column = 0;
};

// Guard / assignment / predicate expression tree.
//
// Literals, references, boolean connectives, comparisons, + - * /, min, max,
// abs, floor and if-then-else. `/` on two integers truncates toward zero.
// Mixed int/real arithmetic promotes to real.
class Expr {
 public:
  enum class Op {
    Literal, Ref,
    Not, Neg,
    Add, Sub, Mul, Div,
    Eq, Ne, Lt, Le, Gt, Ge,
    And, Or,
    Min, Max, Abs, Floor,
    Ite,
  };

  Expr() : Expr(literal(true)) {}

  static Expr literal(Scalar v, SourceLoc loc = {});
  static Expr ref(std::string name, SourceLoc loc = {});
  static Expr unary(Op op, Expr operand, SourceLoc loc = {});
  static Expr binary(Op op, Expr lhs, Expr rhs, SourceLoc loc = {});
  static Expr ite(Expr cond, Expr then_e, Expr else_e, SourceLoc loc = {});

  Op op() const { return op_; }
  const Scalar& value() const { return *value_; }
  const std::string& name() const { return name_; }
  const std::vector<Expr>& args() const { return args_; }
  const SourceLoc& loc() const { return loc_; }

  bool is_true_literal() const;

  // Every referenced name, in first-occurrence order.
  std::vector<std::string> references() const;

  // Replaces references by expressions; unmatched names are kept.
  Expr substitute(const std::map<std::string, Expr>& replacements) const;

  // Source locations are not part of structural equality.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  Expr(Op op, SourceLoc loc) : op_(op), loc_(loc) {}

  Op op_;
  std::optional<Scalar> value_;
  std::string name_;
  std::vector<Expr> args_;
  SourceLoc loc_;
};

const char* op_symbol(Expr::Op op);

// Canonical text: binary operations fully parenthesized; parses back to an
// equal tree.
std::string to_string(const Expr& e);

// Name resolution for evaluation; returns nullptr for unknown names.
using Lookup = std::function<const Scalar*(const std::string&)>;

// Throws EvaluationError on unknown names, type errors, division by zero,
// integer overflow and non-finite reals.
Scalar evaluate(const Expr& e, const Lookup& lookup);
bool evaluate_bool(const Expr& e, const Lookup& lookup);

// Static type of an expression. Integer results are unbounded (`int`).
struct TypeIssue {
  std::string message;
  SourceLoc loc;
};

using TypeLookup = std::function<std::optional<DataType>(const std::string&)>;

// Returns the result type, or nullopt with issues appended.
std::optional<DataType> type_check(const Expr& e, const TypeLookup& lookup,
                                   std::vector<TypeIssue>& issues);

// Whether a value of type `from` may be assigned to a target of type `to`
// (numeric range violations are caught at runtime by Message construction).
bool assignable(const DataType& from, const DataType& to);

// Converts an evaluated value into a message of `type`, promoting ints to
// reals. Throws EvaluationError if the value is outside the domain.
Message coerce(const DataType& type, const Scalar& v);

}  // namespace streamcheck
