#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace streamcheck {

struct EnumDef {
  std::string name;
  std::vector<std::string> labels;

  // Returns labels.size() when the label is unknown.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const EnumDef&, const EnumDef&) = default;
};

// Type of a channel, variable or parameter. Immutable value type.
class DataType {
 public:
  enum class Kind { Boolean, Integer, Real, Enumeration };

  static DataType boolean();
  static DataType integer(std::int64_t lo, std::int64_t hi);
  // Full int64 range, spelled `int` in model files.
  static DataType integer();
  static DataType real();
  static DataType enumeration(std::string name, std::vector<std::string> labels);
  static DataType enumeration(std::shared_ptr<const EnumDef> def);

  Kind kind() const { return kind_; }
  bool is_boolean() const { return kind_ == Kind::Boolean; }
  bool is_integer() const { return kind_ == Kind::Integer; }
  bool is_real() const { return kind_ == Kind::Real; }
  bool is_enum() const { return kind_ == Kind::Enumeration; }
  bool is_numeric() const { return is_integer() || is_real(); }

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  const std::shared_ptr<const EnumDef>& enum_def() const { return enum_; }

  // Number of values, saturated at SIZE_MAX; 0 for real.
  std::size_t cardinality() const;

  // Spelling used in model files: bool, int, int[lo,hi], real, or enum name.
  std::string to_string() const;

  friend bool operator==(const DataType& a, const DataType& b);

 private:
  DataType() = default;

  Kind kind_ = Kind::Boolean;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::shared_ptr<const EnumDef> enum_;
};

}  // namespace streamcheck
