#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "streamcheck/abstraction/correspondence.hpp"
#include "streamcheck/abstraction/galois.hpp"
#include "streamcheck/model/causality.hpp"
#include "streamcheck/testing/test_case.hpp"

namespace streamcheck::report {

using nlohmann::ordered_json;

ordered_json to_json(const Message& m);
ordered_json to_json(const TimedStream& s);
ordered_json to_json(const ChannelHistory& h);
ordered_json to_json(const Divergence& d);
ordered_json to_json(const CaseReport& c);
ordered_json to_json(const CorrespondenceResult& r);
ordered_json to_json(const GaloisResult& r);
ordered_json to_json(const CausalityResult& r);

// "[v1,v2,...]"
std::string render(const TimedStream& s);
// "ch1=[..] ch2=[..]"
std::string render(const ChannelHistory& h);
// "{ h1; h2 }"
std::string render(const std::vector<ChannelHistory>& set);

// Column-aligned per-tick table of input and output histories.
std::string table(const ChannelHistory& inputs, const ChannelHistory& outputs, std::size_t ticks);

class Style {
 public:
  explicit Style(bool color) : color_(color) {}
  std::string good(const std::string& s) const { return wrap("32", s); }
  std::string bad(const std::string& s) const { return wrap("31", s); }
  std::string warn(const std::string& s) const { return wrap("33", s); }

 private:
  std::string wrap(const char* code, const std::string& s) const {
    return color_ ? "\x1b[" + std::string(code) + "m" + s + "\x1b[0m" : s;
  }
  bool color_;
};

}  // namespace streamcheck::report
