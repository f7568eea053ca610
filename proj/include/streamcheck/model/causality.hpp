#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "streamcheck/core/stream.hpp"
#include "streamcheck/model/component.hpp"
#include "streamcheck/model/simulator.hpp"

namespace streamcheck {

struct CausalityOptions {
  std::size_t horizon = 3;
  // Random trials used when exhaustive enumeration exceeds exhaustive_limit.
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  // Largest number of input histories enumerated exhaustively.
  std::size_t exhaustive_limit = std::size_t{1} << 16;
  // Per-input value sets overriding the defaults: bool and enum channels use
  // every value, integer channels with at most 16 values likewise; wider
  // integers use the two-point abstraction {-1, 1} clamped to the range,
  // reals use {-1.0, 1.0}.
  std::map<std::string, std::vector<Message>> domains;
  // In random mode, draw wide integers and reals from their full range
  // (reals from [-1000, 1000]) instead of the two-point abstraction.
  bool sample_wide = false;
  // Property to check; defaults to the component's own causality (strict
  // unless some output has zero-delay feedthrough).
  std::optional<Causality> mode;
  SimOptions sim;
};

struct CausalityCounterexample {
  // Inputs agree on ticks 1..agree_ticks; outputs differ at diverge_tick,
  // which is <= agree_ticks + 1 (strict) or <= agree_ticks (weak).
  ChannelHistory input1;
  ChannelHistory input2;
  ChannelHistory output1;
  ChannelHistory output2;
  std::size_t agree_ticks = 0;
  std::size_t diverge_tick = 0;
  std::string channel;
};

struct CausalityResult {
  enum class Status { Ok, Counterexample, Error };
  Status status = Status::Ok;
  Causality mode = Causality::Strict;
  bool exhaustive = false;
  std::size_t histories = 0;  // histories simulated
  std::optional<CausalityCounterexample> counterexample;
  std::string error;

  bool ok() const { return status == Status::Ok; }
};

// Searches for two input histories that agree on a prefix of t ticks but whose
// outputs differ within t+1 ticks (strict) or t ticks (weak).
CausalityResult check_causality(const ComponentSpec& spec, const CausalityOptions& options = {});

}  // namespace streamcheck
