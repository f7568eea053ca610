#include "streamcheck/model/compose_check.hpp"

#include <functional>
#include <map>
#include <set>

namespace streamcheck {

std::string to_string(CompositionViolation::Kind kind) {
  using K = CompositionViolation::Kind;
  switch (kind) {
    case K::UnknownEndpoint: return "unknown endpoint";
    case K::WrongDirection: return "wrong direction";
    case K::UnconnectedConsumer: return "unconnected consumer";
    case K::MultipleProducers: return "multiple producers";
    case K::TypeMismatch: return "type mismatch";
    case K::ZeroDelayCycle: return "zero-delay cycle";
    case K::InterfaceClash: return "interface clash";
    case K::UnresolvedComponent: return "unresolved component";
    case K::InvalidSubcomponent: return "invalid subcomponent";
  }
  return "?";
}

namespace {

using PortPairs = std::set<std::pair<std::string, std::string>>;

PortPairs feedthrough_pairs(const ComponentSpec& spec);

// Zero-delay edges between connector ends inside one composite. Node names
// are endpoint strings ("in", "sub.port", "out").
std::map<std::string, std::vector<std::string>> zero_delay_graph(const CompositeSpec& c) {
  std::map<std::string, std::vector<std::string>> g;
  for (const auto& k : c.connectors) g[k.from.to_string()].push_back(k.to.to_string());
  for (const auto& sub : c.subcomponents) {
    if (!sub.spec) continue;
    for (const auto& [in, out] : feedthrough_pairs(*sub.spec)) {
      g[Endpoint{sub.instance, in}.to_string()].push_back(Endpoint{sub.instance, out}.to_string());
    }
  }
  return g;
}

PortPairs feedthrough_pairs(const ComponentSpec& spec) {
  PortPairs out;
  if (spec.is_automaton()) {
    const auto& a = spec.automaton();
    if (a.causality == Causality::Weak) {
      for (const auto& i : a.interface.inputs) {
        for (const auto& o : a.interface.outputs) out.emplace(i.name, o.name);
      }
    }
    return out;
  }
  const auto& c = spec.composite();
  auto g = zero_delay_graph(c);
  std::set<std::string> outputs;
  for (const auto& o : c.interface.outputs) outputs.insert(o.name);
  for (const auto& i : c.interface.inputs) {
    std::set<std::string> seen{i.name};
    std::vector<std::string> work{i.name};
    while (!work.empty()) {
      std::string n = work.back();
      work.pop_back();
      auto it = g.find(n);
      if (it == g.end()) continue;
      for (const auto& m : it->second) {
        if (!seen.insert(m).second) continue;
        if (outputs.count(m)) out.emplace(i.name, m);
        work.push_back(m);
      }
    }
  }
  return out;
}

void check_level(const CompositeSpec& c, const std::string& where,
                 std::vector<CompositionViolation>& out, int depth) {
  using K = CompositionViolation::Kind;
  auto add = [&](K kind, std::string msg, std::vector<std::string> path = {}) {
    out.push_back({kind, where + ": " + std::move(msg), std::move(path)});
  };
  if (depth > 64) {
    add(K::InvalidSubcomponent, "composite nesting too deep (recursive definition?)");
    return;
  }

  std::set<std::string> iface;
  for (const auto& ch : c.interface.inputs) {
    if (!iface.insert(ch.name).second) add(K::InterfaceClash, "duplicate channel " + ch.name);
  }
  for (const auto& ch : c.interface.outputs) {
    if (!iface.insert(ch.name).second) add(K::InterfaceClash, "duplicate channel " + ch.name);
  }

  std::map<std::string, const Subcomponent*> subs;
  for (const auto& s : c.subcomponents) {
    if (!subs.emplace(s.instance, &s).second) {
      add(K::InterfaceClash, "duplicate instance " + s.instance);
    }
    if (!s.spec) {
      add(K::UnresolvedComponent, "instance " + s.instance + " of unknown component " +
                                      s.type_name);
      continue;
    }
    std::string sub_where = where + "." + s.instance;
    if (s.spec->is_automaton()) {
      for (const auto& issue : check_automaton(s.spec->automaton())) {
        out.push_back({K::InvalidSubcomponent, sub_where + ": " + issue.message, {}});
      }
    } else {
      check_level(s.spec->composite(), sub_where, out, depth + 1);
    }
  }

  // Resolves an end to its channel, checking it exists on the right side.
  auto producer_type = [&](const Endpoint& e) -> const Channel* {
    if (e.instance.empty()) {
      if (const Channel* ch = c.interface.find_input(e.port)) return ch;
      if (c.interface.find_output(e.port)) {
        add(K::WrongDirection, "composite output " + e.port + " used as a producer");
      } else {
        add(K::UnknownEndpoint, "unknown channel " + e.port);
      }
      return nullptr;
    }
    auto it = subs.find(e.instance);
    if (it == subs.end()) {
      add(K::UnknownEndpoint, "unknown instance " + e.instance);
      return nullptr;
    }
    if (!it->second->spec) return nullptr;
    const auto& si = it->second->spec->interface();
    if (const Channel* ch = si.find_output(e.port)) return ch;
    if (si.find_input(e.port)) {
      add(K::WrongDirection, "input " + e.to_string() + " used as a producer");
    } else {
      add(K::UnknownEndpoint, "unknown port " + e.to_string());
    }
    return nullptr;
  };
  auto consumer_type = [&](const Endpoint& e) -> const Channel* {
    if (e.instance.empty()) {
      if (const Channel* ch = c.interface.find_output(e.port)) return ch;
      if (c.interface.find_input(e.port)) {
        add(K::WrongDirection, "composite input " + e.port + " used as a consumer");
      } else {
        add(K::UnknownEndpoint, "unknown channel " + e.port);
      }
      return nullptr;
    }
    auto it = subs.find(e.instance);
    if (it == subs.end()) {
      add(K::UnknownEndpoint, "unknown instance " + e.instance);
      return nullptr;
    }
    if (!it->second->spec) return nullptr;
    const auto& si = it->second->spec->interface();
    if (const Channel* ch = si.find_input(e.port)) return ch;
    if (si.find_output(e.port)) {
      add(K::WrongDirection, "output " + e.to_string() + " used as a consumer");
    } else {
      add(K::UnknownEndpoint, "unknown port " + e.to_string());
    }
    return nullptr;
  };

  std::map<Endpoint, int> producers;
  for (const auto& k : c.connectors) {
    const Channel* from = producer_type(k.from);
    const Channel* to = consumer_type(k.to);
    if (from && to && !(from->type == to->type)) {
      add(K::TypeMismatch, k.from.to_string() + " (" + from->type.to_string() + ") -> " +
                               k.to.to_string() + " (" + to->type.to_string() + ")");
    }
    ++producers[k.to];
  }

  std::vector<Endpoint> consumers;
  for (const auto& s : c.subcomponents) {
    if (!s.spec) continue;
    for (const auto& in : s.spec->interface().inputs) consumers.push_back({s.instance, in.name});
  }
  for (const auto& o : c.interface.outputs) consumers.push_back({"", o.name});
  for (const auto& e : consumers) {
    auto it = producers.find(e);
    int n = it == producers.end() ? 0 : it->second;
    if (n == 0) add(K::UnconnectedConsumer, "unconnected consumer " + e.to_string());
    if (n > 1) add(K::MultipleProducers, e.to_string() + " has " + std::to_string(n) + " producers");
  }

  // Zero-delay cycles: DFS over the end graph; report each cycle once.
  auto g = zero_delay_graph(c);
  std::map<std::string, int> mark;
  std::vector<std::string> stack;
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    mark[n] = 1;
    stack.push_back(n);
    if (auto it = g.find(n); it != g.end()) {
      for (const auto& m : it->second) {
        if (mark[m] == 1) {
          std::vector<std::string> path;
          bool in_cycle = false;
          for (const auto& s : stack) {
            if (s == m) in_cycle = true;
            if (in_cycle) path.push_back(s);
          }
          path.push_back(m);
          std::string text;
          for (std::size_t i = 0; i < path.size(); ++i) text += (i ? " -> " : "") + path[i];
          add(K::ZeroDelayCycle, "zero-delay cycle " + text, path);
        } else if (mark[m] == 0) {
          visit(m);
        }
      }
    }
    stack.pop_back();
    mark[n] = 2;
  };
  for (const auto& [n, edges] : g) {
    if (mark[n] == 0) visit(n);
  }
}

}  // namespace

std::vector<CompositionViolation> compose_check(const CompositeSpec& spec) {
  std::vector<CompositionViolation> out;
  check_level(spec, spec.name, out, 0);
  return out;
}

}  // namespace streamcheck
