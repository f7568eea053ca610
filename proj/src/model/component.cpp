#include "streamcheck/model/component.hpp"

#include <set>

namespace streamcheck {

namespace {

const Channel* find_channel(const std::vector<Channel>& cs, const std::string& name) {
  for (const auto& c : cs) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

const Channel* SyntacticInterface::find_input(const std::string& name) const {
  return find_channel(inputs, name);
}

const Channel* SyntacticInterface::find_output(const std::string& name) const {
  return find_channel(outputs, name);
}

const Subcomponent* CompositeSpec::find(const std::string& instance) const {
  for (const auto& s : subcomponents) {
    if (s.instance == instance) return &s;
  }
  return nullptr;
}

const std::string& ComponentSpec::name() const {
  return is_automaton() ? automaton().name : composite().name;
}

const SyntacticInterface& ComponentSpec::interface() const {
  return is_automaton() ? automaton().interface : composite().interface;
}

std::vector<SpecIssue> check_automaton(const AutomatonSpec& spec) {
  std::vector<SpecIssue> issues;
  auto issue = [&](std::string msg, SourceLoc loc = {}) {
    issues.push_back({spec.name + ": " + std::move(msg), loc});
  };

  std::map<std::string, DataType> readable;  // inputs, variables, params
  std::map<std::string, DataType> writable;  // outputs, variables
  std::set<std::string> names;
  auto declare = [&](const std::string& n, const char* what) {
    if (!names.insert(n).second) issue(std::string("duplicate name ") + n + " (" + what + ")");
  };
  for (const auto& c : spec.interface.inputs) {
    declare(c.name, "input");
    readable.emplace(c.name, c.type);
  }
  for (const auto& c : spec.interface.outputs) {
    declare(c.name, "output");
    writable.emplace(c.name, c.type);
  }
  for (const auto& v : spec.variables) {
    declare(v.name, "variable");
    readable.emplace(v.name, v.type);
    writable.emplace(v.name, v.type);
    if (!admits(v.type, v.init.value())) issue("initial value of " + v.name + " is ill-typed");
  }
  for (const auto& p : spec.params) {
    declare(p.name, "parameter");
    readable.emplace(p.name, p.type);
    if (p.default_value && !admits(p.type, p.default_value->value())) {
      issue("default of parameter " + p.name + " is ill-typed");
    }
  }

  std::set<std::string> states;
  for (const auto& s : spec.states) {
    if (!states.insert(s).second) issue("duplicate state " + s);
  }
  if (spec.states.empty()) issue("no states declared");
  if (!states.count(spec.initial_state)) {
    issue(spec.initial_state.empty() ? "no initial state"
                                     : "initial state " + spec.initial_state + " is not declared");
  }

  TypeLookup lookup = [&](const std::string& n) -> std::optional<DataType> {
    auto it = readable.find(n);
    if (it == readable.end()) return std::nullopt;
    return it->second;
  };

  for (const auto& t : spec.transitions) {
    std::string label = t.name.empty() ? t.source + "->" + t.target : t.name;
    if (!states.count(t.source)) issue("transition " + label + ": unknown state " + t.source);
    if (!states.count(t.target)) issue("transition " + label + ": unknown state " + t.target);
    std::vector<TypeIssue> ti;
    auto gt = type_check(t.guard, lookup, ti);
    for (auto& x : ti) issue("transition " + label + ": " + x.message, x.loc);
    if (gt && !gt->is_boolean()) issue("transition " + label + ": guard is not boolean",
                                       t.guard.loc());
    std::set<std::string> assigned;
    for (const auto& a : t.assignments) {
      auto w = writable.find(a.target);
      if (w == writable.end()) {
        issue("transition " + label + ": cannot assign to " + a.target, a.value.loc());
        continue;
      }
      if (!assigned.insert(a.target).second) {
        issue("transition " + label + ": " + a.target + " assigned twice", a.value.loc());
      }
      std::vector<TypeIssue> ai;
      auto at = type_check(a.value, lookup, ai);
      for (auto& x : ai) issue("transition " + label + ": " + x.message, x.loc);
      if (at && !assignable(*at, w->second)) {
        issue("transition " + label + ": cannot assign " + at->to_string() + " to " + a.target +
                  " of type " + w->second.to_string(),
              a.value.loc());
      }
    }
  }

  for (const auto& [name, m] : spec.output_init) {
    const Channel* c = spec.interface.find_output(name);
    if (!c) {
      issue("initial value for unknown output " + name);
    } else if (!admits(c->type, m.value())) {
      issue("initial value of output " + name + " is ill-typed");
    }
  }
  if (spec.causality == Causality::Strict) {
    for (const auto& c : spec.interface.outputs) {
      if (!spec.output_init.count(c.name)) {
        issue("strict component needs an initial value for output " + c.name);
      }
    }
  }
  return issues;
}

}  // namespace streamcheck
