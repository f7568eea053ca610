#include <sstream>

#include "streamcheck/format/document.hpp"

namespace streamcheck {

namespace {

std::string decl(const Channel& c) { return c.name + ": " + c.type.to_string(); }

std::string join_values(const std::vector<Message>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : ", ") + v.to_string();
  return out;
}

void write_automaton(std::ostream& os, const AutomatonSpec& a) {
  os << "component " << a.name << " {\n";
  if (a.causality == Causality::Weak) os << "  causality weak;\n";
  if (a.total) os << "  total;\n";
  for (const auto& c : a.interface.inputs) os << "  input " << decl(c) << ";\n";
  for (const auto& c : a.interface.outputs) {
    os << "  output " << decl(c);
    auto it = a.output_init.find(c.name);
    if (it != a.output_init.end()) os << " = " << it->second.to_string();
    os << ";\n";
  }
  for (const auto& v : a.variables) {
    os << "  var " << v.name << ": " << v.type.to_string() << " = " << v.init.to_string() << ";\n";
  }
  for (const auto& p : a.params) {
    os << "  param " << p.name << ": " << p.type.to_string();
    if (p.default_value) os << " = " << p.default_value->to_string();
    os << ";\n";
  }
  if (!a.states.empty()) {
    os << "  states ";
    for (std::size_t i = 0; i < a.states.size(); ++i) os << (i ? ", " : "") << a.states[i];
    os << ";\n";
  }
  if (!a.initial_state.empty()) os << "  initial " << a.initial_state << ";\n";
  if (!a.transitions.empty()) {
    os << "  transitions {\n";
    for (const auto& t : a.transitions) {
      os << "    ";
      if (!t.name.empty()) os << t.name << ": ";
      os << t.source << " -> " << t.target;
      if (!t.guard.is_true_literal()) os << " when " << to_string(t.guard);
      for (std::size_t i = 0; i < t.assignments.size(); ++i) {
        os << (i ? ", " : " do ") << t.assignments[i].target << " := "
           << to_string(t.assignments[i].value);
      }
      os << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
}

void write_composite(std::ostream& os, const CompositeSpec& c) {
  os << "composite " << c.name << " {\n";
  for (const auto& ch : c.interface.inputs) os << "  input " << decl(ch) << ";\n";
  for (const auto& ch : c.interface.outputs) os << "  output " << decl(ch) << ";\n";
  for (const auto& s : c.subcomponents) os << "  sub " << s.instance << ": " << s.type_name << ";\n";
  for (const auto& k : c.connectors) {
    os << "  connect " << k.from.to_string() << " -> " << k.to.to_string() << ";\n";
  }
  os << "}\n";
}

void write_relation(std::ostream& os, const RelationSpec& r) {
  os << "relation " << r.name << " " << to_string(r.side) << " " << r.abstract_component << " -> "
     << r.concrete_component << " {\n";
  if (r.is_predicate()) {
    os << "  holds " << to_string(r.predicate()) << ";\n";
  } else {
    os << "  checker " << r.checker().component << " {\n";
    for (const auto& w : r.checker().wires) {
      os << "    " << (w.abstract_side ? "a." : "c.") << w.channel << " -> " << w.port << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
}

void write_galois(std::ostream& os, const GaloisSpec& g) {
  os << "galois " << g.name << " {\n";
  os << "  horizon " << g.horizon << ";\n";
  if (g.f_component) os << "  f component " << *g.f_component << ";\n";
  for (const auto& ch : g.channels) {
    os << "  map " << ch.concrete << ": " << ch.concrete_type.to_string() << " -> " << ch.abstract
       << ": " << ch.abstract_type.to_string() << " {\n";
    if (ch.f) os << "    f " << to_string(*ch.f) << ";\n";
    os << "    g " << to_string(ch.g) << ";\n";
    if (ch.concrete_universe) os << "    universe " << join_values(*ch.concrete_universe) << ";\n";
    if (ch.abstract_universe) {
      os << "    abstract universe " << join_values(*ch.abstract_universe) << ";\n";
    }
    os << "  }\n";
  }
  os << "}\n";
}

void write_concretizer(std::ostream& os, const ConcretizerSpec& c) {
  os << "concretizer " << c.name << " of " << c.component_name << " {\n";
  for (const auto& p : c.params) {
    os << "  " << (p.kind == ConcretizerParam::Kind::Stream ? "stream " : "const ") << p.name << ": "
       << p.type.to_string();
    if (p.range) os << " in [" << p.range->first.to_string() << ", " << p.range->second.to_string() << "]";
    os << ";\n";
  }
  os << "}\n";
}

void write_refinement(std::ostream& os, const RefinementSpec& r) {
  os << "refinement " << r.name << " {\n";
  if (!r.abstract_name.empty()) os << "  abstract " << r.abstract_name << ";\n";
  if (!r.concrete_name.empty()) os << "  concrete " << r.concrete_name << ";\n";
  if (!r.ri_name.empty()) os << "  ri " << r.ri_name << ";\n";
  if (!r.ro_name.empty()) os << "  ro " << r.ro_name << ";\n";
  if (r.concretizer_name) os << "  concretizer " << *r.concretizer_name << ";\n";
  if (r.galois_name) os << "  galois " << *r.galois_name << ";\n";
  os << "}\n";
}

}  // namespace

std::string serialize_model(const ModelDocument& doc) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "\n";
    first = false;
  };
  for (const auto& e : doc.enums) {
    sep();
    os << "enum " << e->name << " { ";
    for (std::size_t i = 0; i < e->labels.size(); ++i) os << (i ? ", " : "") << e->labels[i];
    os << " }\n";
  }
  for (const auto& c : doc.components) {
    sep();
    if (c->is_automaton()) {
      write_automaton(os, c->automaton());
    } else {
      write_composite(os, c->composite());
    }
  }
  for (const auto& r : doc.relations) {
    sep();
    write_relation(os, *r);
  }
  for (const auto& g : doc.galois) {
    sep();
    write_galois(os, *g);
  }
  for (const auto& c : doc.concretizers) {
    sep();
    write_concretizer(os, *c);
  }
  for (const auto& r : doc.refinements) {
    sep();
    write_refinement(os, *r);
  }
  return os.str();
}

}  // namespace streamcheck
