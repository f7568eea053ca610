#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "streamcheck/core/stream.hpp"
#include "streamcheck/model/component.hpp"
#include "streamcheck/model/expr.hpp"

namespace streamcheck {

// RI relates abstract and concrete inputs, RO their outputs.
enum class RelationSide { Input, Output };

std::string to_string(RelationSide side);

// Routes one channel of the paired histories into a checker input port.
struct CheckerWire {
  bool abstract_side = true;  // `a.<channel>` or `c.<channel>`
  std::string channel;
  std::string port;

  friend bool operator==(const CheckerWire&, const CheckerWire&) = default;
};

struct CheckerRef {
  std::string component;
  std::shared_ptr<const ComponentSpec> spec;
  std::vector<CheckerWire> wires;

  friend bool operator==(const CheckerRef& a, const CheckerRef& b) {
    return a.component == b.component && a.wires == b.wires;
  }
};

// Per-tick predicate over `a.<channel>` / `c.<channel>` (implicitly for all
// ticks), or a checker component with one boolean output.
struct RelationSpec {
  std::string name;
  RelationSide side = RelationSide::Input;
  std::string abstract_component;
  std::string concrete_component;
  std::vector<Channel> abstract_channels;
  std::vector<Channel> concrete_channels;
  std::variant<Expr, CheckerRef> form;

  bool is_predicate() const { return std::holds_alternative<Expr>(form); }
  const Expr& predicate() const { return std::get<Expr>(form); }
  const CheckerRef& checker() const { return std::get<CheckerRef>(form); }

  friend bool operator==(const RelationSpec&, const RelationSpec&) = default;
};

// Builds the channel lists of a relation from the two components' interfaces.
RelationSpec make_relation(std::string name, RelationSide side, const ComponentSpec& abstract_c,
                           const ComponentSpec& concrete_c, std::variant<Expr, CheckerRef> form);

std::vector<SpecIssue> check_relation(const RelationSpec& rel);

struct RelationResult {
  bool holds = true;
  TimedStream per_tick{DataType::boolean()};
};

// Overall verdict of a bool stream: true iff no tick is false.
bool fold_verdicts(const TimedStream& s);

// Evaluates the relation tick by tick on paired histories of equal horizon.
// Throws SpecError on a type/horizon mismatch, SimulationError from checkers.
RelationResult eval_relation(const RelationSpec& rel, const ChannelHistory& a,
                             const ChannelHistory& c);

}  // namespace streamcheck
