#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "streamcheck/core/data_type.hpp"

namespace streamcheck {

struct EnumLabel {
  std::shared_ptr<const EnumDef> def;
  std::size_t index = 0;

  const std::string& label() const { return def->labels[index]; }
  friend bool operator==(const EnumLabel& a, const EnumLabel& b);
};

// Untyped runtime value produced by expression evaluation.
using Scalar = std::variant<bool, std::int64_t, double, EnumLabel>;

bool scalar_equal(const Scalar& a, const Scalar& b, double eps = 0.0);
std::string scalar_to_string(const Scalar& v);

// Whether `v` lies in the domain of `type`.
bool admits(const DataType& type, const Scalar& v);

// One message on a channel: a Scalar checked against its DataType at
// construction. There is no way to build a Message outside its domain.
class Message {
 public:
  // Throws DomainError.
  Message(const DataType& type, Scalar value);

  static Message of(bool b) { return Message(DataType::boolean(), b); }

  const Scalar& value() const { return value_; }

  bool as_bool() const { return std::get<bool>(value_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(value_); }
  double as_real() const { return std::get<double>(value_); }
  const EnumLabel& as_enum() const { return std::get<EnumLabel>(value_); }

  std::string to_string() const { return scalar_to_string(value_); }

  friend bool operator==(const Message& a, const Message& b) {
    return scalar_equal(a.value_, b.value_);
  }

 private:
  Scalar value_;
};

// Default value of a type: false, lo (or 0 when in range), 0.0, first label.
Message default_message(const DataType& type);

// Parses a cell or literal in the canonical text form of `type`:
// true/false, decimal integers, decimal reals, bare enum labels.
// Returns nullopt when the text does not parse or is out of domain.
std::optional<Message> parse_message(const DataType& type, const std::string& text);

// Shortest text that parses back to the same real; always contains '.' or 'e'.
std::string format_real(double v);

}  // namespace streamcheck
