#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "streamcheck/abstraction/galois.hpp"
#include "streamcheck/core/stream.hpp"
#include "streamcheck/model/component.hpp"
#include "streamcheck/model/simulator.hpp"

namespace streamcheck {

// A parameter of f⁻¹ₚ. Constants are bound once per run; streams are extra
// input channels of the concretizer component and may vary per tick.
struct ConcretizerParam {
  enum class Kind { Constant, Stream };

  std::string name;
  Kind kind = Kind::Constant;
  DataType type = DataType::real();
  // Sampling domain [lo, hi] for numeric parameters.
  std::optional<std::pair<Message, Message>> range;

  friend bool operator==(const ConcretizerParam&, const ConcretizerParam&) = default;
};

struct ConcretizerSpec {
  std::string name;
  std::string component_name;
  std::shared_ptr<const ComponentSpec> component;  // interface (I_a + stream params ▶ I_c)
  std::vector<ConcretizerParam> params;

  const ConcretizerParam* find(const std::string& param) const;

  friend bool operator==(const ConcretizerSpec& a, const ConcretizerSpec& b) {
    return a.name == b.name && a.component_name == b.component_name && a.params == b.params;
  }
};

struct ParamBinding {
  Valuation constants;
  std::map<std::string, TimedStream> streams;

  friend bool operator==(const ParamBinding&, const ParamBinding&) = default;
};

std::vector<SpecIssue> check_concretizer(const ConcretizerSpec& conc);

// Abstract input channels of the concretizer: component inputs that are not
// stream parameters.
std::vector<Channel> abstract_inputs(const ConcretizerSpec& conc);

// Runs the instantiated concretizer on an abstract test input. Throws
// SpecError for unbound or ill-typed parameters, SimulationError on runtime
// failures.
ChannelHistory concretize(const ConcretizerSpec& conc, const ParamBinding& p,
                          const ChannelHistory& ta);

// Draws a binding from the declared parameter domains. Stream parameters get
// `horizon` independent draws. Throws SpecError for unbounded numeric params
// without a range.
ParamBinding sample_binding(const ConcretizerSpec& conc, std::size_t horizon, std::mt19937_64& rng);

// Uniform draw of one value of an enumerable or ranged type.
Message sample_message(const DataType& type, std::mt19937_64& rng,
                       const std::optional<std::pair<Message, Message>>& range = std::nullopt);

struct ConcretizationSample {
  ParamBinding params;
  ChannelHistory input;  // abstract test input
};

struct FinvCounterexample {
  std::size_t sample_index = 0;
  ConcretizationSample sample;
  ChannelHistory concrete;
};

struct FinvResult {
  bool ok = true;
  std::size_t samples_checked = 0;
  std::optional<FinvCounterexample> counterexample;
};

// For every sample, the concretized input must be a g-member of the abstract
// input. Returns the first violation.
FinvResult check_finv_in_g(const GaloisSpec& gal, const ConcretizerSpec& conc,
                           const std::vector<ConcretizationSample>& samples);

}  // namespace streamcheck
