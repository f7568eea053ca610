#include "streamcheck/model/expr.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "streamcheck/error.hpp"

namespace streamcheck {

Expr Expr::literal(Scalar v, SourceLoc loc) {
  Expr e(Op::Literal, loc);
  e.value_ = std::move(v);
  return e;
}

Expr Expr::ref(std::string name, SourceLoc loc) {
  Expr e(Op::Ref, loc);
  e.name_ = std::move(name);
  return e;
}

Expr Expr::unary(Op op, Expr operand, SourceLoc loc) {
  if (op != Op::Not && op != Op::Neg && op != Op::Abs && op != Op::Floor) {
    throw SpecError(std::string("not a unary operator: ") + op_symbol(op));
  }
  Expr e(op, loc);
  e.args_.push_back(std::move(operand));
  return e;
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs, SourceLoc loc) {
  switch (op) {
    case Op::Literal: case Op::Ref: case Op::Not: case Op::Neg:
    case Op::Abs: case Op::Floor: case Op::Ite:
      throw SpecError(std::string("not a binary operator: ") + op_symbol(op));
    default:
      break;
  }
  Expr e(op, loc);
  e.args_.push_back(std::move(lhs));
  e.args_.push_back(std::move(rhs));
  return e;
}

Expr Expr::ite(Expr cond, Expr then_e, Expr else_e, SourceLoc loc) {
  Expr e(Op::Ite, loc);
  e.args_.push_back(std::move(cond));
  e.args_.push_back(std::move(then_e));
  e.args_.push_back(std::move(else_e));
  return e;
}

bool Expr::is_true_literal() const {
  if (op_ != Op::Literal) return false;
  const auto* b = std::get_if<bool>(&*value_);
  return b && *b;
}

std::vector<std::string> Expr::references() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::function<void(const Expr&)> walk = [&](const Expr& e) {
    if (e.op_ == Op::Ref && seen.insert(e.name_).second) out.push_back(e.name_);
    for (const auto& a : e.args_) walk(a);
  };
  walk(*this);
  return out;
}

Expr Expr::substitute(const std::map<std::string, Expr>& replacements) const {
  if (op_ == Op::Ref) {
    auto it = replacements.find(name_);
    return it == replacements.end() ? *this : it->second;
  }
  Expr out = *this;
  for (auto& a : out.args_) a = a.substitute(replacements);
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.op_ != b.op_ || a.name_ != b.name_ || a.args_ != b.args_) return false;
  if (a.value_.has_value() != b.value_.has_value()) return false;
  return !a.value_ || scalar_equal(*a.value_, *b.value_);
}

const char* op_symbol(Expr::Op op) {
  switch (op) {
    case Expr::Op::Literal: return "literal";
    case Expr::Op::Ref: return "ref";
    case Expr::Op::Not: return "!";
    case Expr::Op::Neg: return "-";
    case Expr::Op::Add: return "+";
    case Expr::Op::Sub: return "-";
    case Expr::Op::Mul: return "*";
    case Expr::Op::Div: return "/";
    case Expr::Op::Eq: return "==";
    case Expr::Op::Ne: return "!=";
    case Expr::Op::Lt: return "<";
    case Expr::Op::Le: return "<=";
    case Expr::Op::Gt: return ">";
    case Expr::Op::Ge: return ">=";
    case Expr::Op::And: return "&&";
    case Expr::Op::Or: return "||";
    case Expr::Op::Min: return "min";
    case Expr::Op::Max: return "max";
    case Expr::Op::Abs: return "abs";
    case Expr::Op::Floor: return "floor";
    case Expr::Op::Ite: return "if";
  }
  return "?";
}

std::string to_string(const Expr& e) {
  using Op = Expr::Op;
  const auto& a = e.args();
  switch (e.op()) {
    case Op::Literal:
      return scalar_to_string(e.value());
    case Op::Ref:
      return e.name();
    case Op::Not:
      return "!(" + to_string(a[0]) + ")";
    case Op::Neg:
      return "-(" + to_string(a[0]) + ")";
    case Op::Min:
    case Op::Max:
      return std::string(op_symbol(e.op())) + "(" + to_string(a[0]) + ", " + to_string(a[1]) +
             ")";
    case Op::Abs:
    case Op::Floor:
      return std::string(op_symbol(e.op())) + "(" + to_string(a[0]) + ")";
    case Op::Ite:
      return "(if " + to_string(a[0]) + " then " + to_string(a[1]) + " else " +
             to_string(a[2]) + ")";
    default:
      return "(" + to_string(a[0]) + " " + op_symbol(e.op()) + " " + to_string(a[1]) + ")";
  }
}

// --- evaluation -------------------------------------------------------------

namespace {

[[noreturn]] void eval_fail(const Expr& e, const std::string& what) {
  std::string where;
  if (e.loc().line) {
    where = " at " + std::to_string(e.loc().line) + ":" + std::to_string(e.loc().column);
  }
  throw EvaluationError(what + where + " in `" + to_string(e) + "`");
}

bool is_num(const Scalar& v) {
  return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<double>(v);
}

double as_double(const Scalar& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::get<double>(v);
}

Scalar checked_real(const Expr& e, double d) {
  if (!std::isfinite(d)) eval_fail(e, "non-finite real result");
  return d;
}

Scalar arith(const Expr& e, const Scalar& l, const Scalar& r) {
  if (!is_num(l) || !is_num(r)) eval_fail(e, "arithmetic on non-numeric operands");
  const auto* li = std::get_if<std::int64_t>(&l);
  const auto* ri = std::get_if<std::int64_t>(&r);
  if (li && ri) {
    std::int64_t out = 0;
    switch (e.op()) {
      case Expr::Op::Add:
        if (__builtin_add_overflow(*li, *ri, &out)) eval_fail(e, "integer overflow");
        return out;
      case Expr::Op::Sub:
        if (__builtin_sub_overflow(*li, *ri, &out)) eval_fail(e, "integer overflow");
        return out;
      case Expr::Op::Mul:
        if (__builtin_mul_overflow(*li, *ri, &out)) eval_fail(e, "integer overflow");
        return out;
      case Expr::Op::Div:
        if (*ri == 0) eval_fail(e, "division by zero");
        if (*li == std::numeric_limits<std::int64_t>::min() && *ri == -1) {
          eval_fail(e, "integer overflow");
        }
        return *li / *ri;
      default:
        break;
    }
  }
  double x = as_double(l);
  double y = as_double(r);
  switch (e.op()) {
    case Expr::Op::Add: return checked_real(e, x + y);
    case Expr::Op::Sub: return checked_real(e, x - y);
    case Expr::Op::Mul: return checked_real(e, x * y);
    case Expr::Op::Div:
      if (y == 0.0) eval_fail(e, "division by zero");
      return checked_real(e, x / y);
    default:
      eval_fail(e, "bad arithmetic operator");
  }
}

bool equal_values(const Expr& e, const Scalar& l, const Scalar& r) {
  if (is_num(l) && is_num(r)) {
    if (l.index() == r.index()) return l == r;
    return as_double(l) == as_double(r);
  }
  if (l.index() != r.index()) eval_fail(e, "comparison of incompatible values");
  if (const auto* le = std::get_if<EnumLabel>(&l)) {
    const auto& re = std::get<EnumLabel>(r);
    if (!(le->def == re.def || *le->def == *re.def)) {
      eval_fail(e, "comparison of labels from different enumerations");
    }
  }
  return l == r;
}

int compare_num(const Expr& e, const Scalar& l, const Scalar& r) {
  if (!is_num(l) || !is_num(r)) eval_fail(e, "ordering of non-numeric operands");
  const auto* li = std::get_if<std::int64_t>(&l);
  const auto* ri = std::get_if<std::int64_t>(&r);
  if (li && ri) return (*li < *ri) ? -1 : (*li > *ri ? 1 : 0);
  double x = as_double(l);
  double y = as_double(r);
  return (x < y) ? -1 : (x > y ? 1 : 0);
}

bool want_bool(const Expr& e, const Scalar& v) {
  const auto* b = std::get_if<bool>(&v);
  if (!b) eval_fail(e, "expected a boolean operand");
  return *b;
}

}  // namespace

Scalar evaluate(const Expr& e, const Lookup& lookup) {
  using Op = Expr::Op;
  const auto& a = e.args();
  switch (e.op()) {
    case Op::Literal:
      return e.value();
    case Op::Ref: {
      const Scalar* v = lookup(e.name());
      if (!v) eval_fail(e, "unresolved name " + e.name());
      return *v;
    }
    case Op::Not:
      return !want_bool(e, evaluate(a[0], lookup));
    case Op::Neg: {
      Scalar v = evaluate(a[0], lookup);
      if (const auto* i = std::get_if<std::int64_t>(&v)) {
        if (*i == std::numeric_limits<std::int64_t>::min()) eval_fail(e, "integer overflow");
        return -*i;
      }
      if (const auto* d = std::get_if<double>(&v)) return -*d;
      eval_fail(e, "negation of non-numeric operand");
    }
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Div:
      return arith(e, evaluate(a[0], lookup), evaluate(a[1], lookup));
    case Op::Eq:
      return equal_values(e, evaluate(a[0], lookup), evaluate(a[1], lookup));
    case Op::Ne:
      return !equal_values(e, evaluate(a[0], lookup), evaluate(a[1], lookup));
    case Op::Lt:
      return compare_num(e, evaluate(a[0], lookup), evaluate(a[1], lookup)) < 0;
    case Op::Le:
      return compare_num(e, evaluate(a[0], lookup), evaluate(a[1], lookup)) <= 0;
    case Op::Gt:
      return compare_num(e, evaluate(a[0], lookup), evaluate(a[1], lookup)) > 0;
    case Op::Ge:
      return compare_num(e, evaluate(a[0], lookup), evaluate(a[1], lookup)) >= 0;
    case Op::And:
      return want_bool(e, evaluate(a[0], lookup)) && want_bool(e, evaluate(a[1], lookup));
    case Op::Or:
      return want_bool(e, evaluate(a[0], lookup)) || want_bool(e, evaluate(a[1], lookup));
    case Op::Min:
    case Op::Max: {
      Scalar l = evaluate(a[0], lookup);
      Scalar r = evaluate(a[1], lookup);
      int c = compare_num(e, l, r);
      bool take_left = e.op() == Op::Min ? c <= 0 : c >= 0;
      if (l.index() != r.index()) return as_double(take_left ? l : r);
      return take_left ? l : r;
    }
    case Op::Abs: {
      Scalar v = evaluate(a[0], lookup);
      if (const auto* i = std::get_if<std::int64_t>(&v)) {
        if (*i == std::numeric_limits<std::int64_t>::min()) eval_fail(e, "integer overflow");
        return *i < 0 ? -*i : *i;
      }
      if (const auto* d = std::get_if<double>(&v)) return std::fabs(*d);
      eval_fail(e, "abs of non-numeric operand");
    }
    case Op::Floor: {
      Scalar v = evaluate(a[0], lookup);
      if (std::holds_alternative<std::int64_t>(v)) return v;
      if (const auto* d = std::get_if<double>(&v)) {
        double f = std::floor(*d);
        if (f < -9.2233720368547758e18 || f >= 9.2233720368547758e18) {
          eval_fail(e, "floor result out of integer range");
        }
        return static_cast<std::int64_t>(f);
      }
      eval_fail(e, "floor of non-numeric operand");
    }
    case Op::Ite:
      return want_bool(e, evaluate(a[0], lookup)) ? evaluate(a[1], lookup)
                                                  : evaluate(a[2], lookup);
  }
  eval_fail(e, "unknown operator");
}

bool evaluate_bool(const Expr& e, const Lookup& lookup) {
  Scalar v = evaluate(e, lookup);
  const auto* b = std::get_if<bool>(&v);
  if (!b) eval_fail(e, "expected a boolean result");
  return *b;
}

// --- static typing ------------------------------------------------------------

namespace {

enum class Cls { Bool, Int, Real, Enum };

struct Typed {
  Cls cls;
  std::shared_ptr<const EnumDef> def;
};

std::optional<Typed> classify(const DataType& t) {
  switch (t.kind()) {
    case DataType::Kind::Boolean: return Typed{Cls::Bool, nullptr};
    case DataType::Kind::Integer: return Typed{Cls::Int, nullptr};
    case DataType::Kind::Real: return Typed{Cls::Real, nullptr};
    case DataType::Kind::Enumeration: return Typed{Cls::Enum, t.enum_def()};
  }
  return std::nullopt;
}

DataType to_type(const Typed& t) {
  switch (t.cls) {
    case Cls::Bool: return DataType::boolean();
    case Cls::Int: return DataType::integer();
    case Cls::Real: return DataType::real();
    case Cls::Enum: return DataType::enumeration(t.def);
  }
  return DataType::boolean();
}

const char* cls_name(Cls c) {
  switch (c) {
    case Cls::Bool: return "bool";
    case Cls::Int: return "int";
    case Cls::Real: return "real";
    case Cls::Enum: return "enum";
  }
  return "?";
}

bool numeric(Cls c) { return c == Cls::Int || c == Cls::Real; }

bool same_enum(const Typed& a, const Typed& b) {
  return a.def == b.def || (a.def && b.def && *a.def == *b.def);
}

class Checker {
 public:
  Checker(const TypeLookup& lookup, std::vector<TypeIssue>& issues)
      : lookup_(lookup), issues_(issues) {}

  std::optional<Typed> check(const Expr& e) {
    using Op = Expr::Op;
    const auto& a = e.args();
    switch (e.op()) {
      case Op::Literal: {
        const Scalar& v = e.value();
        if (std::holds_alternative<bool>(v)) return Typed{Cls::Bool, nullptr};
        if (std::holds_alternative<std::int64_t>(v)) return Typed{Cls::Int, nullptr};
        if (std::holds_alternative<double>(v)) return Typed{Cls::Real, nullptr};
        return Typed{Cls::Enum, std::get<EnumLabel>(v).def};
      }
      case Op::Ref: {
        auto t = lookup_(e.name());
        if (!t) return fail(e, "unresolved name " + e.name());
        return classify(*t);
      }
      case Op::Not: {
        auto t = check(a[0]);
        if (!t) return std::nullopt;
        if (t->cls != Cls::Bool) return fail(e, "operand of ! must be bool");
        return t;
      }
      case Op::Neg:
      case Op::Abs: {
        auto t = check(a[0]);
        if (!t) return std::nullopt;
        if (!numeric(t->cls)) return fail(e, std::string("operand of ") + op_symbol(e.op()) +
                                                 " must be numeric");
        return t;
      }
      case Op::Floor: {
        auto t = check(a[0]);
        if (!t) return std::nullopt;
        if (!numeric(t->cls)) return fail(e, "operand of floor must be numeric");
        return Typed{Cls::Int, nullptr};
      }
      case Op::Add: case Op::Sub: case Op::Mul: case Op::Div:
      case Op::Min: case Op::Max: {
        auto l = check(a[0]);
        auto r = check(a[1]);
        if (!l || !r) return std::nullopt;
        if (!numeric(l->cls) || !numeric(r->cls)) {
          return fail(e, std::string("operands of ") + op_symbol(e.op()) + " must be numeric, got " +
                             cls_name(l->cls) + " and " + cls_name(r->cls));
        }
        if (l->cls == Cls::Real || r->cls == Cls::Real) return Typed{Cls::Real, nullptr};
        return Typed{Cls::Int, nullptr};
      }
      case Op::Lt: case Op::Le: case Op::Gt: case Op::Ge: {
        auto l = check(a[0]);
        auto r = check(a[1]);
        if (!l || !r) return std::nullopt;
        if (!numeric(l->cls) || !numeric(r->cls)) {
          return fail(e, std::string("operands of ") + op_symbol(e.op()) + " must be numeric");
        }
        return Typed{Cls::Bool, nullptr};
      }
      case Op::Eq: case Op::Ne: {
        auto l = check(a[0]);
        auto r = check(a[1]);
        if (!l || !r) return std::nullopt;
        if (!comparable(*l, *r)) {
          return fail(e, std::string("cannot compare ") + cls_name(l->cls) + " with " +
                             cls_name(r->cls));
        }
        return Typed{Cls::Bool, nullptr};
      }
      case Op::And: case Op::Or: {
        auto l = check(a[0]);
        auto r = check(a[1]);
        if (!l || !r) return std::nullopt;
        if (l->cls != Cls::Bool || r->cls != Cls::Bool) {
          return fail(e, std::string("operands of ") + op_symbol(e.op()) + " must be bool");
        }
        return Typed{Cls::Bool, nullptr};
      }
      case Op::Ite: {
        auto c = check(a[0]);
        auto t = check(a[1]);
        auto f = check(a[2]);
        if (!c || !t || !f) return std::nullopt;
        if (c->cls != Cls::Bool) return fail(e, "condition of if must be bool");
        if (numeric(t->cls) && numeric(f->cls)) {
          return Typed{t->cls == Cls::Real || f->cls == Cls::Real ? Cls::Real : Cls::Int,
                       nullptr};
        }
        if (!comparable(*t, *f)) return fail(e, "branches of if have different types");
        return t;
      }
    }
    return fail(e, "unknown operator");
  }

 private:
  static bool comparable(const Typed& l, const Typed& r) {
    if (numeric(l.cls) && numeric(r.cls)) return true;
    if (l.cls != r.cls) return false;
    return l.cls != Cls::Enum || same_enum(l, r);
  }

  std::optional<Typed> fail(const Expr& e, std::string msg) {
    issues_.push_back({std::move(msg), e.loc()});
    return std::nullopt;
  }

  const TypeLookup& lookup_;
  std::vector<TypeIssue>& issues_;
};

}  // namespace

std::optional<DataType> type_check(const Expr& e, const TypeLookup& lookup,
                                   std::vector<TypeIssue>& issues) {
  Checker c(lookup, issues);
  auto t = c.check(e);
  if (!t) return std::nullopt;
  return to_type(*t);
}

bool assignable(const DataType& from, const DataType& to) {
  if (to.is_real()) return from.is_numeric();
  if (to.is_integer()) return from.is_integer();
  return from == to;
}

Message coerce(const DataType& type, const Scalar& v) {
  Scalar value = v;
  if (type.is_real()) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) value = static_cast<double>(*i);
  }
  if (!admits(type, value)) {
    throw EvaluationError("value " + scalar_to_string(v) + " is outside " + type.to_string());
  }
  return Message(type, std::move(value));
}

}  // namespace streamcheck
