#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "streamcheck/core/stream.hpp"
#include "streamcheck/format/document.hpp"

namespace sctest {

using namespace streamcheck;

inline std::string fixture(const std::string& name) {
  return std::string(STREAMCHECK_FIXTURE_DIR) + "/" + name;
}

inline std::string test_data(const std::string& name) {
  return std::string(STREAMCHECK_TEST_DATA_DIR) + "/" + name;
}

inline ModelDocument load_fixture(const std::string& name) { return load_model_file(fixture(name)); }

inline TimedStream bools(std::initializer_list<bool> vs) {
  TimedStream s(DataType::boolean());
  for (bool b : vs) s.push_back(Message::of(b));
  return s;
}

inline TimedStream ints(const std::vector<std::int64_t>& vs, DataType t = DataType::integer()) {
  TimedStream s(t);
  for (auto v : vs) s.push_back(Message(t, v));
  return s;
}

inline TimedStream reals(const std::vector<double>& vs) {
  TimedStream s(DataType::real());
  for (auto v : vs) s.push_back(Message(DataType::real(), v));
  return s;
}

inline TimedStream labels(const DataType& t, const std::vector<std::string>& vs) {
  TimedStream s(t);
  for (const auto& v : vs) s.push_back(*parse_message(t, v));
  return s;
}

inline ChannelHistory history(std::vector<std::pair<std::string, TimedStream>> bindings) {
  std::map<std::string, TimedStream> m;
  for (auto& [k, v] : bindings) m.emplace(k, std::move(v));
  return ChannelHistory(std::move(m));
}

inline const DataType& input_type(const ComponentSpec& c, const std::string& name) {
  return c.interface().find_input(name)->type;
}

inline const DataType& output_type(const ComponentSpec& c, const std::string& name) {
  return c.interface().find_output(name)->type;
}

}  // namespace sctest
