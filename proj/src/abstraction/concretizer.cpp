#include "streamcheck/abstraction/concretizer.hpp"

#include <algorithm>
#include <cmath>

#include "streamcheck/error.hpp"

namespace streamcheck {

const ConcretizerParam* ConcretizerSpec::find(const std::string& param) const {
  for (const auto& p : params) {
    if (p.name == param) return &p;
  }
  return nullptr;
}

std::vector<SpecIssue> check_concretizer(const ConcretizerSpec& conc) {
  std::vector<SpecIssue> issues;
  auto issue = [&](std::string m) {
    issues.push_back({"concretizer " + conc.name + ": " + std::move(m), {}});
  };
  if (!conc.component) {
    issue("unknown component " + conc.component_name);
    return issues;
  }
  const auto& iface = conc.component->interface();
  std::vector<std::string> seen;
  for (const auto& p : conc.params) {
    if (std::find(seen.begin(), seen.end(), p.name) != seen.end()) {
      issue("parameter " + p.name + " declared twice");
    }
    seen.push_back(p.name);
    if (p.kind == ConcretizerParam::Kind::Stream) {
      const Channel* in = iface.find_input(p.name);
      if (!in) {
        issue("stream parameter " + p.name + " is not an input of " + conc.component_name);
      } else if (!(in->type == p.type)) {
        issue("stream parameter " + p.name + " has type " + p.type.to_string() + ", input has " +
              in->type.to_string());
      }
    } else if (conc.component->is_automaton()) {
      const auto& ps = conc.component->automaton().params;
      auto it = std::find_if(ps.begin(), ps.end(), [&](const Parameter& x) { return x.name == p.name; });
      if (it == ps.end()) {
        issue("constant parameter " + p.name + " is not a parameter of " + conc.component_name);
      } else if (!(it->type == p.type)) {
        issue("constant parameter " + p.name + " has type " + p.type.to_string() +
              ", component declares " + it->type.to_string());
      }
    }
    if (p.range) {
      if (!p.type.is_numeric()) {
        issue("parameter " + p.name + " of type " + p.type.to_string() + " cannot have a range");
      } else if (!admits(p.type, p.range->first.value()) ||
                 !admits(p.type, p.range->second.value())) {
        issue("range of parameter " + p.name + " is outside its type");
      } else if (p.type.is_integer() ? p.range->first.as_int() > p.range->second.as_int()
                                     : p.range->first.as_real() > p.range->second.as_real()) {
        issue("range of parameter " + p.name + " is empty");
      }
    }
  }
  return issues;
}

std::vector<Channel> abstract_inputs(const ConcretizerSpec& conc) {
  std::vector<Channel> out;
  if (!conc.component) return out;
  for (const auto& in : conc.component->interface().inputs) {
    const ConcretizerParam* p = conc.find(in.name);
    if (!p || p->kind != ConcretizerParam::Kind::Stream) out.push_back(in);
  }
  return out;
}

ChannelHistory concretize(const ConcretizerSpec& conc, const ParamBinding& p,
                          const ChannelHistory& ta) {
  auto issues = check_concretizer(conc);
  if (!issues.empty()) throw SpecError(issues.front().message);
  SimOptions opts;
  ChannelHistory in(ta.horizon);
  for (const auto& param : conc.params) {
    if (param.kind == ConcretizerParam::Kind::Constant) {
      auto it = p.constants.find(param.name);
      if (it == p.constants.end()) throw SpecError("unbound parameter " + param.name);
      if (!admits(param.type, it->second.value())) {
        throw SpecError("parameter " + param.name + " = " + it->second.to_string() + " is not a " +
                        param.type.to_string());
      }
      opts.params.emplace(param.name, coerce(param.type, it->second.value()));
    } else {
      auto it = p.streams.find(param.name);
      if (it == p.streams.end()) throw SpecError("unbound parameter " + param.name);
      if (it->second.horizon() < ta.horizon) {
        throw SpecError("stream parameter " + param.name + " has " +
                        std::to_string(it->second.horizon()) + " ticks, input has " +
                        std::to_string(ta.horizon));
      }
      in.bindings.emplace(param.name, prefix(it->second, ta.horizon));
    }
  }
  for (const auto& name : p.constants) {
    if (!conc.find(name.first)) throw SpecError("unknown parameter " + name.first);
  }
  for (const auto& name : p.streams) {
    if (!conc.find(name.first)) throw SpecError("unknown parameter " + name.first);
  }
  for (const auto& [name, s] : ta.bindings) {
    if (in.bindings.count(name)) throw SpecError("input " + name + " is bound as a parameter");
    in.bindings.emplace(name, s);
  }
  return run(*conc.component, in, ta.horizon, opts);
}

Message sample_message(const DataType& type, std::mt19937_64& rng,
                       const std::optional<std::pair<Message, Message>>& range) {
  switch (type.kind()) {
    case DataType::Kind::Boolean:
      return Message::of(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
    case DataType::Kind::Enumeration: {
      std::uniform_int_distribution<std::size_t> d(0, type.enum_def()->labels.size() - 1);
      return Message(type, EnumLabel{type.enum_def(), d(rng)});
    }
    case DataType::Kind::Integer: {
      std::int64_t lo = range ? range->first.as_int() : type.lo();
      std::int64_t hi = range ? range->second.as_int() : type.hi();
      if (!range && type.cardinality() == SIZE_MAX) {
        throw SpecError("no sampling range for type " + type.to_string());
      }
      return Message(type, std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
    }
    case DataType::Kind::Real: {
      if (!range) throw SpecError("no sampling range for type real");
      double lo = range->first.as_real();
      double hi = range->second.as_real();
      double v = lo == hi ? lo : std::uniform_real_distribution<double>(lo, hi)(rng);
      return Message(type, std::clamp(v, lo, hi));
    }
  }
  throw SpecError("unsupported type");
}

ParamBinding sample_binding(const ConcretizerSpec& conc, std::size_t horizon,
                            std::mt19937_64& rng) {
  ParamBinding b;
  for (const auto& p : conc.params) {
    try {
      if (p.kind == ConcretizerParam::Kind::Constant) {
        b.constants.emplace(p.name, sample_message(p.type, rng, p.range));
      } else {
        TimedStream s(p.type);
        for (std::size_t t = 0; t < horizon; ++t) s.push_back(sample_message(p.type, rng, p.range));
        b.streams.emplace(p.name, std::move(s));
      }
    } catch (const SpecError& e) {
      throw SpecError("parameter " + p.name + ": " + e.what());
    }
  }
  return b;
}

FinvResult check_finv_in_g(const GaloisSpec& gal, const ConcretizerSpec& conc,
                           const std::vector<ConcretizationSample>& samples) {
  FinvResult r;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    ChannelHistory tc = concretize(conc, s.params, s.input);
    bool related = false;
    for (const auto& ch : gal.channels) {
      if (s.input.has(ch.abstract) && tc.has(ch.concrete)) related = true;
    }
    if (!related) {
      throw SpecError("galois " + gal.name + " relates none of the channels of concretizer " +
                      conc.name);
    }
    ++r.samples_checked;
    if (!g_member(gal, s.input, tc)) {
      r.ok = false;
      r.counterexample = FinvCounterexample{i, s, std::move(tc)};
      return r;
    }
  }
  return r;
}

}  // namespace streamcheck
