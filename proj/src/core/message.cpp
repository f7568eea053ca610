#include "streamcheck/core/message.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

#include "streamcheck/error.hpp"

namespace streamcheck {

bool operator==(const EnumLabel& a, const EnumLabel& b) {
  if (a.index != b.index) return false;
  if (a.def == b.def) return true;
  return a.def && b.def && *a.def == *b.def;
}

bool scalar_equal(const Scalar& a, const Scalar& b, double eps) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<double>(&a)) {
    double y = std::get<double>(b);
    if (eps <= 0.0) return *x == y;
    return std::fabs(*x - y) <= eps;
  }
  return a == b;
}

std::string format_real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string scalar_to_string(const Scalar& v) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_real(d); }
    std::string operator()(const EnumLabel& e) const { return e.label(); }
  };
  return std::visit(Visitor{}, v);
}

bool admits(const DataType& type, const Scalar& v) {
  switch (type.kind()) {
    case DataType::Kind::Boolean:
      return std::holds_alternative<bool>(v);
    case DataType::Kind::Integer: {
      const auto* i = std::get_if<std::int64_t>(&v);
      return i && *i >= type.lo() && *i <= type.hi();
    }
    case DataType::Kind::Real: {
      const auto* d = std::get_if<double>(&v);
      return d && std::isfinite(*d);
    }
    case DataType::Kind::Enumeration: {
      const auto* e = std::get_if<EnumLabel>(&v);
      if (!e || !e->def) return false;
      return (e->def == type.enum_def() || *e->def == *type.enum_def()) &&
             e->index < e->def->labels.size();
    }
  }
  return false;
}

Message::Message(const DataType& type, Scalar value) : value_(std::move(value)) {
  if (!admits(type, value_)) {
    throw DomainError("value " + scalar_to_string(value_) + " is not in the domain of " +
                      type.to_string());
  }
}

Message default_message(const DataType& type) {
  switch (type.kind()) {
    case DataType::Kind::Boolean:
      return Message(type, false);
    case DataType::Kind::Integer:
      if (type.lo() <= 0 && type.hi() >= 0) return Message(type, std::int64_t{0});
      return Message(type, type.lo());
    case DataType::Kind::Real:
      return Message(type, 0.0);
    case DataType::Kind::Enumeration:
      return Message(type, EnumLabel{type.enum_def(), 0});
  }
  throw DomainError("unknown type kind");
}

namespace {

std::optional<std::int64_t> parse_int(const std::string& text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || first == last) return std::nullopt;
  return v;
}

std::optional<double> parse_double(const std::string& text) {
  double v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  if (first == last) return std::nullopt;
  // Reject inf/nan spellings; reals are finite decimals.
  for (const char* p = first; p != last; ++p) {
    if (std::strchr("0123456789.eE+-", *p) == nullptr) return std::nullopt;
  }
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Message> parse_message(const DataType& type, const std::string& text) {
  Scalar v;
  switch (type.kind()) {
    case DataType::Kind::Boolean:
      if (text == "true") {
        v = true;
      } else if (text == "false") {
        v = false;
      } else {
        return std::nullopt;
      }
      break;
    case DataType::Kind::Integer: {
      auto i = parse_int(text);
      if (!i) return std::nullopt;
      v = *i;
      break;
    }
    case DataType::Kind::Real: {
      auto d = parse_double(text);
      if (!d) return std::nullopt;
      v = *d;
      break;
    }
    case DataType::Kind::Enumeration: {
      std::size_t idx = type.enum_def()->index_of(text);
      if (idx == type.enum_def()->labels.size()) return std::nullopt;
      v = EnumLabel{type.enum_def(), idx};
      break;
    }
  }
  if (!admits(type, v)) return std::nullopt;
  return Message(type, std::move(v));
}

}  // namespace streamcheck
