#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "streamcheck/core/stream.hpp"
#include "streamcheck/model/component.hpp"

namespace streamcheck {

using Valuation = std::map<std::string, Message>;

struct SimOptions {
  // Resolve overlapping guards by declaration order instead of failing.
  bool permissive = false;
  // Constant parameters. Keys are parameter names for a root automaton, or
  // "<instance path>.<name>" for automata inside a composite.
  Valuation params;
};

// Runtime state of one atomic automaton.
struct AutomatonState {
  std::string state;
  Valuation variables;
  // Last computed output values. In strict mode these are what the next tick
  // emits; unassigned outputs keep (latch) their value.
  Valuation outputs;

  friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
};

// State of a (flattened) component: one entry per atomic automaton, in
// depth-first instance order.
struct ComponentState {
  std::vector<AutomatonState> automata;

  friend bool operator==(const ComponentState&, const ComponentState&) = default;
};

// Executable form of a ComponentSpec. Composites are flattened into a network
// of automata; each tick, zero-delay (weak) automata run in dependency order
// before strict ones update their state.
class Simulator {
 public:
  // Throws SpecError for malformed specs, unbound parameters and zero-delay
  // cycles.
  explicit Simulator(const ComponentSpec& spec, SimOptions options = {});
  ~Simulator();
  Simulator(Simulator&&) noexcept;
  Simulator& operator=(Simulator&&) noexcept;

  const SyntacticInterface& interface() const;

  // True if some output can depend on the same tick's inputs.
  bool has_feedthrough() const;

  ComponentState initial_state() const;

  // Consumes one message per input channel and returns one per output.
  // `tick` is used for diagnostics only. Throws SimulationError.
  Valuation step(ComponentState& state, const Valuation& inputs, std::size_t tick) const;

  // Iterates step from the initial state for n ticks.
  ChannelHistory run(const ChannelHistory& input, std::size_t n) const;

 private:
  struct Network;
  std::unique_ptr<Network> net_;
};

std::pair<ComponentState, Valuation> step(const ComponentSpec& spec, const ComponentState& st,
                                          const Valuation& inputs, std::size_t tick = 1,
                                          const SimOptions& options = {});

// Throws SpecError if the input history is not valid for the interface or is
// shorter than n, SimulationError on runtime failures.
ChannelHistory run(const ComponentSpec& spec, const ChannelHistory& input, std::size_t n,
                   const SimOptions& options = {});

}  // namespace streamcheck
