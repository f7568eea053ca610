#include "streamcheck/model/simulator.hpp"

#include <functional>
#include <limits>
#include <set>

#include "streamcheck/error.hpp"
#include "streamcheck/model/compose_check.hpp"

namespace streamcheck {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Source {
  std::size_t automaton = kNone;  // kNone: top-level input
  std::string port;
};

struct FlatAutomaton {
  std::string path;
  const AutomatonSpec* spec = nullptr;
  Valuation params;
  std::vector<std::pair<std::string, Source>> inputs;
};

struct Node {
  const ComponentSpec* spec = nullptr;
  std::string path;
  std::string instance;
  Node* parent = nullptr;
  std::map<std::string, std::unique_ptr<Node>> children;
  std::size_t automaton = kNone;
};

const Connector* feeding(const CompositeSpec& c, const Endpoint& to) {
  for (const auto& k : c.connectors) {
    if (k.to == to) return &k;
  }
  return nullptr;
}

std::string join(const std::string& path, const std::string& name) {
  return path.empty() ? name : path + "." + name;
}

}  // namespace

struct Simulator::Network {
  ComponentSpec root;
  SimOptions options;
  std::vector<FlatAutomaton> automata;
  std::vector<std::size_t> weak_order;
  std::vector<std::size_t> strict;
  std::vector<std::pair<std::string, Source>> outputs;
  bool feedthrough = false;

  Network(const ComponentSpec& spec, SimOptions opts) : root(spec), options(std::move(opts)) {}

  void build(Node& node) {
    if (node.spec->is_automaton()) {
      const AutomatonSpec& a = node.spec->automaton();
      auto issues = check_automaton(a);
      if (!issues.empty()) throw SpecError(issues.front().message);
      FlatAutomaton fa;
      fa.path = node.path;
      fa.spec = &a;
      for (const auto& p : a.params) {
        std::string key = join(node.path, p.name);
        auto it = options.params.find(key);
        if (it != options.params.end()) {
          if (!admits(p.type, it->second.value())) {
            throw SpecError("parameter " + key + " bound to ill-typed value " +
                            it->second.to_string());
          }
          fa.params.emplace(p.name, it->second);
        } else if (p.default_value) {
          fa.params.emplace(p.name, *p.default_value);
        } else {
          throw SpecError("unbound parameter " + key);
        }
      }
      node.automaton = automata.size();
      automata.push_back(std::move(fa));
      return;
    }
    for (const auto& sub : node.spec->composite().subcomponents) {
      if (!sub.spec) throw SpecError("unresolved component " + sub.type_name);
      auto child = std::make_unique<Node>();
      child->spec = sub.spec.get();
      child->path = join(node.path, sub.instance);
      child->instance = sub.instance;
      child->parent = &node;
      Node& ref = *child;
      node.children.emplace(sub.instance, std::move(child));
      build(ref);
    }
  }

  // Follows wires from a producer end inside `composite` to the atomic output
  // or top-level input that ultimately drives it.
  Source resolve(const Node& composite, const Endpoint& from, int depth = 0) const {
    if (depth > 256) throw SpecError("wiring loop without components at " + from.to_string());
    if (from.instance.empty()) {
      if (!composite.parent) {
        if (!composite.spec->interface().find_input(from.port)) {
          throw SpecError("unknown input " + from.port + " of " + composite.spec->name());
        }
        return Source{kNone, from.port};
      }
      const Connector* k =
          feeding(composite.parent->spec->composite(), Endpoint{composite.instance, from.port});
      if (!k) throw SpecError("unconnected consumer " + join(composite.path, from.port));
      return resolve(*composite.parent, k->from, depth + 1);
    }
    auto it = composite.children.find(from.instance);
    if (it == composite.children.end()) {
      throw SpecError("unknown instance " + from.instance + " in " + composite.spec->name());
    }
    const Node& child = *it->second;
    if (!child.spec->interface().find_output(from.port)) {
      throw SpecError("unknown output " + from.to_string());
    }
    if (child.automaton != kNone) return Source{child.automaton, from.port};
    const Connector* k = feeding(child.spec->composite(), Endpoint{"", from.port});
    if (!k) throw SpecError("unconnected consumer " + join(child.path, from.port));
    return resolve(child, k->from, depth + 1);
  }

  void wire(const Node& node) {
    if (node.automaton != kNone) return;
    const CompositeSpec& c = node.spec->composite();
    for (const auto& [name, child] : node.children) {
      wire(*child);
      if (child->automaton == kNone) continue;
      FlatAutomaton& fa = automata[child->automaton];
      for (const auto& in : child->spec->interface().inputs) {
        const Connector* k = feeding(c, Endpoint{name, in.name});
        if (!k) throw SpecError("unconnected consumer " + join(child->path, in.name));
        fa.inputs.emplace_back(in.name, resolve(node, k->from));
      }
    }
  }

  void schedule() {
    std::vector<std::size_t> weak;
    for (std::size_t i = 0; i < automata.size(); ++i) {
      if (automata[i].spec->causality == Causality::Weak) {
        weak.push_back(i);
      } else {
        strict.push_back(i);
      }
    }
    // Depth-first topological order over weak -> weak dependencies.
    std::vector<int> mark(automata.size(), 0);
    std::vector<std::size_t> stack;
    std::function<void(std::size_t)> visit = [&](std::size_t i) {
      if (mark[i] == 2) return;
      if (mark[i] == 1) {
        std::string cycle;
        for (auto j : stack) cycle += automata[j].path + " -> ";
        throw SpecError("zero-delay cycle: " + cycle + automata[i].path);
      }
      mark[i] = 1;
      stack.push_back(i);
      for (const auto& [port, src] : automata[i].inputs) {
        if (src.automaton != kNone &&
            automata[src.automaton].spec->causality == Causality::Weak) {
          visit(src.automaton);
        }
      }
      stack.pop_back();
      mark[i] = 2;
      weak_order.push_back(i);
    };
    for (auto i : weak) visit(i);

    std::vector<bool> input_dependent(automata.size(), false);
    for (auto i : weak_order) {
      for (const auto& [port, src] : automata[i].inputs) {
        if (src.automaton == kNone || input_dependent[src.automaton]) input_dependent[i] = true;
      }
    }
    for (const auto& [port, src] : outputs) {
      if (src.automaton == kNone || input_dependent[src.automaton]) feedthrough = true;
    }
  }
};

Simulator::Simulator(const ComponentSpec& spec, SimOptions options)
    : net_(std::make_unique<Network>(spec, std::move(options))) {
  if (spec.is_composite()) {
    auto violations = compose_check(spec.composite());
    if (!violations.empty()) throw SpecError(violations.front().message);
  }
  Node root;
  root.spec = &net_->root;
  net_->build(root);
  for (const auto& [key, value] : net_->options.params) {
    bool known = false;
    for (const auto& fa : net_->automata) {
      for (const auto& p : fa.spec->params) known = known || join(fa.path, p.name) == key;
    }
    if (!known) throw SpecError("unknown parameter " + key);
  }
  if (root.automaton != kNone) {
    FlatAutomaton& fa = net_->automata[root.automaton];
    for (const auto& in : net_->root.interface().inputs) {
      fa.inputs.emplace_back(in.name, Source{kNone, in.name});
    }
    for (const auto& out : net_->root.interface().outputs) {
      net_->outputs.emplace_back(out.name, Source{root.automaton, out.name});
    }
  } else {
    const CompositeSpec& c = net_->root.composite();
    std::set<std::string> names;
    for (const auto& ch : c.interface.inputs) names.insert(ch.name);
    for (const auto& ch : c.interface.outputs) {
      if (!names.insert(ch.name).second) {
        throw SpecError("channel " + ch.name + " is both input and output of " + c.name);
      }
    }
    net_->wire(root);
    for (const auto& out : c.interface.outputs) {
      const Connector* k = feeding(c, Endpoint{"", out.name});
      if (!k) throw SpecError("unconnected consumer " + out.name);
      net_->outputs.emplace_back(out.name, net_->resolve(root, k->from));
    }
  }
  net_->schedule();
}

Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

const SyntacticInterface& Simulator::interface() const { return net_->root.interface(); }

bool Simulator::has_feedthrough() const { return net_->feedthrough; }

ComponentState Simulator::initial_state() const {
  ComponentState st;
  for (const auto& fa : net_->automata) {
    AutomatonState a;
    a.state = fa.spec->initial_state;
    for (const auto& v : fa.spec->variables) a.variables.emplace(v.name, v.init);
    for (const auto& o : fa.spec->interface.outputs) {
      auto it = fa.spec->output_init.find(o.name);
      a.outputs.emplace(o.name, it != fa.spec->output_init.end() ? it->second
                                                                 : default_message(o.type));
    }
    st.automata.push_back(std::move(a));
  }
  return st;
}

namespace {

// Fires at most one transition of an automaton and updates its state.
void fire(const FlatAutomaton& fa, AutomatonState& st, const Valuation& inputs,
          std::size_t tick, bool permissive) {
  const AutomatonSpec& spec = *fa.spec;
  Lookup lookup = [&](const std::string& n) -> const Scalar* {
    if (auto it = inputs.find(n); it != inputs.end()) return &it->second.value();
    if (auto it = st.variables.find(n); it != st.variables.end()) return &it->second.value();
    if (auto it = fa.params.find(n); it != fa.params.end()) return &it->second.value();
    return nullptr;
  };
  std::string who = fa.path.empty() ? spec.name : fa.path;

  const Transition* chosen = nullptr;
  try {
    for (const auto& t : spec.transitions) {
      if (t.source != st.state) continue;
      if (!evaluate_bool(t.guard, lookup)) continue;
      if (!chosen) {
        chosen = &t;
        if (permissive) break;
      } else {
        throw NondeterminismError(
            "tick " + std::to_string(tick) + ": " + who + " has overlapping transitions " +
                (chosen->name.empty() ? chosen->source + "->" + chosen->target : chosen->name) +
                " and " + (t.name.empty() ? t.source + "->" + t.target : t.name) +
                " enabled in state " + st.state,
            tick);
      }
    }
  } catch (const EvaluationError& e) {
    throw SimulationError("tick " + std::to_string(tick) + ": " + who + ": " + e.what(), tick);
  }

  if (!chosen) {
    if (spec.total) {
      throw StuckError("tick " + std::to_string(tick) + ": " + who + " is stuck in state " +
                           st.state + " (no enabled transition)",
                       tick);
    }
    return;  // implicit self-loop; outputs latch
  }

  std::vector<std::pair<const std::string*, Message>> updates;
  try {
    for (const auto& a : chosen->assignments) {
      const DataType* type = nullptr;
      if (const Channel* c = spec.interface.find_output(a.target)) {
        type = &c->type;
      } else {
        for (const auto& v : spec.variables) {
          if (v.name == a.target) type = &v.type;
        }
      }
      if (!type) throw EvaluationError("unknown assignment target " + a.target);
      updates.emplace_back(&a.target, coerce(*type, evaluate(a.value, lookup)));
    }
  } catch (const Error& e) {
    throw SimulationError("tick " + std::to_string(tick) + ": " + who + ": " + e.what(), tick);
  }
  for (auto& [target, m] : updates) {
    if (auto it = st.outputs.find(*target); it != st.outputs.end()) {
      it->second = std::move(m);
    } else {
      st.variables.at(*target) = std::move(m);
    }
  }
  st.state = chosen->target;
}

}  // namespace

Valuation Simulator::step(ComponentState& state, const Valuation& inputs,
                          std::size_t tick) const {
  const Network& net = *net_;
  if (state.automata.size() != net.automata.size()) {
    throw SimulationError("state does not belong to this component", tick);
  }
  for (const auto& c : interface().inputs) {
    auto it = inputs.find(c.name);
    if (it == inputs.end()) {
      throw SimulationError("tick " + std::to_string(tick) + ": no message for input " + c.name,
                            tick);
    }
    if (!admits(c.type, it->second.value())) {
      throw SimulationError("tick " + std::to_string(tick) + ": input " + c.name +
                                " expects " + c.type.to_string(),
                            tick);
    }
  }

  std::vector<const Valuation*> emitted(net.automata.size(), nullptr);
  std::vector<Valuation> strict_out(net.automata.size());
  for (auto i : net.strict) {
    strict_out[i] = state.automata[i].outputs;
    emitted[i] = &strict_out[i];
  }
  auto gather = [&](const FlatAutomaton& fa) {
    Valuation in;
    for (const auto& [port, src] : fa.inputs) {
      const Valuation& from = src.automaton == kNone ? inputs : *emitted[src.automaton];
      in.emplace(port, from.at(src.port));
    }
    return in;
  };
  for (auto i : net.weak_order) {
    fire(net.automata[i], state.automata[i], gather(net.automata[i]), tick,
         net.options.permissive);
    emitted[i] = &state.automata[i].outputs;
  }
  for (auto i : net.strict) {
    fire(net.automata[i], state.automata[i], gather(net.automata[i]), tick,
         net.options.permissive);
  }
  Valuation out;
  for (const auto& [name, src] : net.outputs) {
    const Valuation& from = src.automaton == kNone ? inputs : *emitted[src.automaton];
    out.emplace(name, from.at(src.port));
  }
  return out;
}

ChannelHistory Simulator::run(const ChannelHistory& input, std::size_t n) const {
  auto violations = validate_history(input, interface().inputs);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw SpecError("input history: " + to_string(v.cause) + " " + v.channel + " (" + v.detail +
                    ")");
  }
  if (input.horizon < n) {
    throw SpecError("input history horizon " + std::to_string(input.horizon) +
                    " is shorter than " + std::to_string(n) + " ticks");
  }
  ChannelHistory out(n);
  for (const auto& c : interface().outputs) out.bindings.emplace(c.name, TimedStream(c.type));
  ComponentState st = initial_state();
  for (std::size_t t = 1; t <= n; ++t) {
    Valuation in;
    for (const auto& [name, s] : input.bindings) in.emplace(name, s.messages()[t - 1]);
    Valuation o = step(st, in, t);
    for (auto& [name, m] : o) out.bindings.at(name).push_back(std::move(m));
  }
  return out;
}

std::pair<ComponentState, Valuation> step(const ComponentSpec& spec, const ComponentState& st,
                                          const Valuation& inputs, std::size_t tick,
                                          const SimOptions& options) {
  Simulator sim(spec, options);
  ComponentState next = st;
  Valuation out = sim.step(next, inputs, tick);
  return {std::move(next), std::move(out)};
}

ChannelHistory run(const ComponentSpec& spec, const ChannelHistory& input, std::size_t n,
                   const SimOptions& options) {
  return Simulator(spec, options).run(input, n);
}

}  // namespace streamcheck
