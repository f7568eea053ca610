#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "streamcheck/core/stream.hpp"
#include "streamcheck/model/expr.hpp"

namespace streamcheck {

// (I ▶ O): typed input and output channels, disjoint by name.
struct SyntacticInterface {
  std::vector<Channel> inputs;
  std::vector<Channel> outputs;

  const Channel* find_input(const std::string& name) const;
  const Channel* find_output(const std::string& name) const;

  friend bool operator==(const SyntacticInterface&, const SyntacticInterface&) = default;
};

// Strict: outputs are emitted one tick after the inputs that caused them.
// Weak: outputs of tick t are computed from inputs of tick t.
enum class Causality { Strict, Weak };

struct Assignment {
  std::string target;  // output channel or variable
  Expr value;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct Transition {
  std::string name;  // may be empty
  std::string source;
  std::string target;
  Expr guard;        // `true` when the transition is unguarded
  std::vector<Assignment> assignments;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Variable {
  std::string name;
  DataType type;
  Message init;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Constant parameter; bound when the component is instantiated.
struct Parameter {
  std::string name;
  DataType type;
  std::optional<Message> default_value;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct AutomatonSpec {
  std::string name;
  SyntacticInterface interface;
  std::vector<std::string> states;
  std::string initial_state;
  std::vector<Variable> variables;
  std::vector<Parameter> params;
  std::vector<Transition> transitions;
  std::map<std::string, Message> output_init;
  Causality causality = Causality::Strict;
  // A total automaton treats "no enabled transition" as an error instead of
  // an implicit self-loop.
  bool total = false;

  friend bool operator==(const AutomatonSpec&, const AutomatonSpec&) = default;
};

class ComponentSpec;

struct Subcomponent {
  std::string instance;
  std::string type_name;
  std::shared_ptr<const ComponentSpec> spec;  // resolved definition

  friend bool operator==(const Subcomponent& a, const Subcomponent& b) {
    return a.instance == b.instance && a.type_name == b.type_name;
  }
};

// One end of a connector. An empty instance names the composite's own port.
struct Endpoint {
  std::string instance;
  std::string port;

  std::string to_string() const { return instance.empty() ? port : instance + "." + port; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Connector {
  Endpoint from;  // composite input or subcomponent output
  Endpoint to;    // subcomponent input or composite output

  friend bool operator==(const Connector&, const Connector&) = default;
};

struct CompositeSpec {
  std::string name;
  SyntacticInterface interface;
  std::vector<Subcomponent> subcomponents;
  std::vector<Connector> connectors;

  const Subcomponent* find(const std::string& instance) const;

  friend bool operator==(const CompositeSpec&, const CompositeSpec&) = default;
};

class ComponentSpec {
 public:
  ComponentSpec(AutomatonSpec a) : v_(std::move(a)) {}
  ComponentSpec(CompositeSpec c) : v_(std::move(c)) {}

  bool is_automaton() const { return std::holds_alternative<AutomatonSpec>(v_); }
  bool is_composite() const { return std::holds_alternative<CompositeSpec>(v_); }
  const AutomatonSpec& automaton() const { return std::get<AutomatonSpec>(v_); }
  const CompositeSpec& composite() const { return std::get<CompositeSpec>(v_); }
  AutomatonSpec& automaton() { return std::get<AutomatonSpec>(v_); }
  CompositeSpec& composite() { return std::get<CompositeSpec>(v_); }

  const std::string& name() const;
  const SyntacticInterface& interface() const;

  friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;

 private:
  std::variant<AutomatonSpec, CompositeSpec> v_;
};

struct SpecIssue {
  std::string message;
  SourceLoc loc;
};

// Structural and static-typing checks on an automaton: one declared initial
// state, known states, resolvable names, well-typed guards and assignments,
// output_init present for every output in strict mode.
std::vector<SpecIssue> check_automaton(const AutomatonSpec& spec);

}  // namespace streamcheck
