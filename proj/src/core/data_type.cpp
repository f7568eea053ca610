#include "streamcheck/core/data_type.hpp"

#include <limits>
#include <set>

#include "streamcheck/error.hpp"

namespace streamcheck {

std::size_t EnumDef::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  return labels.size();
}

DataType DataType::boolean() { return DataType(); }

DataType DataType::integer(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw DomainError("int[" + std::to_string(lo) + "," + std::to_string(hi) +
                      "]: lower bound exceeds upper bound");
  }
  DataType t;
  t.kind_ = Kind::Integer;
  t.lo_ = lo;
  t.hi_ = hi;
  return t;
}

DataType DataType::integer() {
  return integer(std::numeric_limits<std::int64_t>::min(),
                 std::numeric_limits<std::int64_t>::max());
}

DataType DataType::real() {
  DataType t;
  t.kind_ = Kind::Real;
  return t;
}

DataType DataType::enumeration(std::string name, std::vector<std::string> labels) {
  if (labels.empty()) throw DomainError("enum " + name + " has no labels");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw DomainError("enum " + name + " repeats label " + l);
    }
  }
  DataType t;
  t.kind_ = Kind::Enumeration;
  t.enum_ = std::make_shared<const EnumDef>(EnumDef{std::move(name), std::move(labels)});
  return t;
}

DataType DataType::enumeration(std::shared_ptr<const EnumDef> def) {
  if (!def) throw DomainError("null enumeration");
  DataType t = enumeration(def->name, def->labels);
  t.enum_ = std::move(def);
  return t;
}

std::size_t DataType::cardinality() const {
  switch (kind_) {
    case Kind::Boolean:
      return 2;
    case Kind::Integer: {
      auto span = static_cast<unsigned __int128>(
          static_cast<__int128>(hi_) - static_cast<__int128>(lo_) + 1);
      if (span > std::numeric_limits<std::size_t>::max()) {
        return std::numeric_limits<std::size_t>::max();
      }
      return static_cast<std::size_t>(span);
    }
    case Kind::Real:
      return 0;
    case Kind::Enumeration:
      return enum_->labels.size();
  }
  return 0;
}

std::string DataType::to_string() const {
  switch (kind_) {
    case Kind::Boolean:
      return "bool";
    case Kind::Integer:
      if (lo_ == std::numeric_limits<std::int64_t>::min() &&
          hi_ == std::numeric_limits<std::int64_t>::max()) {
        return "int";
      }
      return "int[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
    case Kind::Real:
      return "real";
    case Kind::Enumeration:
      return enum_->name;
  }
  return "?";
}

bool operator==(const DataType& a, const DataType& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case DataType::Kind::Integer:
      return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    case DataType::Kind::Enumeration:
      return a.enum_ == b.enum_ || *a.enum_ == *b.enum_;
    default:
      return true;
  }
}

}  // namespace streamcheck
