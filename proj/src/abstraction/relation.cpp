#include "streamcheck/abstraction/relation.hpp"

#include <set>

#include "streamcheck/error.hpp"
#include "streamcheck/model/simulator.hpp"

namespace streamcheck {

std::string to_string(RelationSide side) {
  return side == RelationSide::Input ? "input" : "output";
}

RelationSpec make_relation(std::string name, RelationSide side, const ComponentSpec& abstract_c,
                           const ComponentSpec& concrete_c, std::variant<Expr, CheckerRef> form) {
  RelationSpec r;
  r.name = std::move(name);
  r.side = side;
  r.abstract_component = abstract_c.name();
  r.concrete_component = concrete_c.name();
  bool in = side == RelationSide::Input;
  r.abstract_channels = in ? abstract_c.interface().inputs : abstract_c.interface().outputs;
  r.concrete_channels = in ? concrete_c.interface().inputs : concrete_c.interface().outputs;
  r.form = std::move(form);
  return r;
}

namespace {

const Channel* find(const std::vector<Channel>& cs, const std::string& n) {
  for (const auto& c : cs) {
    if (c.name == n) return &c;
  }
  return nullptr;
}

}  // namespace

std::vector<SpecIssue> check_relation(const RelationSpec& rel) {
  std::vector<SpecIssue> issues;
  auto issue = [&](std::string m, SourceLoc loc = {}) {
    issues.push_back({"relation " + rel.name + ": " + std::move(m), loc});
  };
  if (rel.is_predicate()) {
    TypeLookup lookup = [&](const std::string& n) -> std::optional<DataType> {
      if (n.rfind("a.", 0) == 0) {
        if (const Channel* c = find(rel.abstract_channels, n.substr(2))) return c->type;
      } else if (n.rfind("c.", 0) == 0) {
        if (const Channel* c = find(rel.concrete_channels, n.substr(2))) return c->type;
      }
      return std::nullopt;
    };
    std::vector<TypeIssue> ti;
    auto t = type_check(rel.predicate(), lookup, ti);
    for (auto& x : ti) issue(x.message, x.loc);
    if (t && !t->is_boolean()) issue("predicate is not boolean", rel.predicate().loc());
    return issues;
  }
  const CheckerRef& ck = rel.checker();
  if (!ck.spec) {
    issue("unknown checker component " + ck.component);
    return issues;
  }
  const auto& iface = ck.spec->interface();
  if (iface.outputs.size() != 1 || !iface.outputs[0].type.is_boolean()) {
    issue("checker " + ck.component + " must have exactly one bool output");
  }
  std::set<std::string> bound;
  for (const auto& w : ck.wires) {
    const Channel* src = find(w.abstract_side ? rel.abstract_channels : rel.concrete_channels,
                              w.channel);
    std::string src_name = (w.abstract_side ? "a." : "c.") + w.channel;
    if (!src) {
      issue("unknown channel " + src_name);
      continue;
    }
    const Channel* dst = iface.find_input(w.port);
    if (!dst) {
      issue("checker " + ck.component + " has no input " + w.port);
      continue;
    }
    if (!bound.insert(w.port).second) issue("checker input " + w.port + " bound twice");
    if (!(src->type == dst->type)) {
      issue("type mismatch " + src_name + " (" + src->type.to_string() + ") -> " + w.port + " (" +
            dst->type.to_string() + ")");
    }
  }
  for (const auto& in : iface.inputs) {
    if (!bound.count(in.name)) issue("checker input " + in.name + " is not bound");
  }
  return issues;
}

bool fold_verdicts(const TimedStream& s) {
  for (const auto& m : s.messages()) {
    if (!m.as_bool()) return false;
  }
  return true;
}

RelationResult eval_relation(const RelationSpec& rel, const ChannelHistory& a,
                             const ChannelHistory& c) {
  auto issues = check_relation(rel);
  if (!issues.empty()) throw SpecError(issues.front().message);
  for (const auto& [hist, chans, side] :
       {std::tuple{&a, &rel.abstract_channels, "abstract"},
        std::tuple{&c, &rel.concrete_channels, "concrete"}}) {
    auto v = validate_history(*hist, *chans);
    if (!v.empty()) {
      throw SpecError("relation " + rel.name + ": " + side + " history: " + to_string(v[0].cause) +
                      " " + v[0].channel);
    }
  }
  if (a.horizon != c.horizon) {
    throw SpecError("relation " + rel.name + ": horizon mismatch (" + std::to_string(a.horizon) +
                    " vs " + std::to_string(c.horizon) + ")");
  }

  RelationResult r;
  if (rel.is_predicate()) {
    for (std::size_t t = 0; t < a.horizon; ++t) {
      Lookup lookup = [&](const std::string& n) -> const Scalar* {
        const ChannelHistory* h = nullptr;
        if (n.rfind("a.", 0) == 0) h = &a;
        if (n.rfind("c.", 0) == 0) h = &c;
        if (!h) return nullptr;
        auto it = h->bindings.find(n.substr(2));
        if (it == h->bindings.end()) return nullptr;
        return &it->second.messages()[t].value();
      };
      bool ok = false;
      try {
        ok = evaluate_bool(rel.predicate(), lookup);
      } catch (const EvaluationError& e) {
        throw SimulationError("relation " + rel.name + ", tick " + std::to_string(t + 1) + ": " +
                                  e.what(),
                              t + 1);
      }
      r.per_tick.push_back(Message::of(ok));
    }
  } else {
    const CheckerRef& ck = rel.checker();
    ChannelHistory in(a.horizon);
    for (const auto& w : ck.wires) {
      in.bindings.emplace(w.port, (w.abstract_side ? a : c).at(w.channel));
    }
    ChannelHistory out = run(*ck.spec, in, a.horizon);
    r.per_tick = out.at(ck.spec->interface().outputs[0].name);
  }
  r.holds = fold_verdicts(r.per_tick);
  return r;
}

}  // namespace streamcheck
