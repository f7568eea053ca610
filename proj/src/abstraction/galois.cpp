#include "streamcheck/abstraction/galois.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "streamcheck/error.hpp"
#include "streamcheck/model/simulator.hpp"

namespace streamcheck {

const ChannelAbstraction* GaloisSpec::by_concrete(const std::string& name) const {
  for (const auto& c : channels) {
    if (c.concrete == name) return &c;
  }
  return nullptr;
}

const ChannelAbstraction* GaloisSpec::by_abstract(const std::string& name) const {
  for (const auto& c : channels) {
    if (c.abstract == name) return &c;
  }
  return nullptr;
}

std::vector<SpecIssue> check_galois(const GaloisSpec& gal) {
  std::vector<SpecIssue> issues;
  auto issue = [&](std::string m, SourceLoc loc = {}) {
    issues.push_back({"galois " + gal.name + ": " + std::move(m), loc});
  };
  std::set<std::string> conc;
  std::set<std::string> abst;
  for (const auto& ch : gal.channels) {
    if (!conc.insert(ch.concrete).second) issue("concrete channel " + ch.concrete + " mapped twice");
    if (!abst.insert(ch.abstract).second) issue("abstract channel " + ch.abstract + " mapped twice");
    TypeLookup f_env = [&](const std::string& n) -> std::optional<DataType> {
      if (n == "c") return ch.concrete_type;
      return std::nullopt;
    };
    TypeLookup g_env = [&](const std::string& n) -> std::optional<DataType> {
      if (n == "c") return ch.concrete_type;
      if (n == "a") return ch.abstract_type;
      return std::nullopt;
    };
    if (ch.f) {
      std::vector<TypeIssue> ti;
      auto t = type_check(*ch.f, f_env, ti);
      for (auto& x : ti) issue("f of " + ch.concrete + ": " + x.message, x.loc);
      if (t && !assignable(*t, ch.abstract_type)) {
        issue("f of " + ch.concrete + " yields " + t->to_string() + ", expected " +
                  ch.abstract_type.to_string(),
              ch.f->loc());
      }
    } else if (!gal.f_component) {
      issue("no f for channel " + ch.concrete);
    }
    std::vector<TypeIssue> gi;
    auto gt = type_check(ch.g, g_env, gi);
    for (auto& x : gi) issue("g of " + ch.concrete + ": " + x.message, x.loc);
    if (gt && !gt->is_boolean()) issue("g of " + ch.concrete + " is not boolean", ch.g.loc());
    if (ch.concrete_universe) {
      for (const auto& m : *ch.concrete_universe) {
        if (!admits(ch.concrete_type, m.value())) {
          issue("universe value " + m.to_string() + " is not a " + ch.concrete_type.to_string());
        }
      }
    }
    if (ch.abstract_universe) {
      for (const auto& m : *ch.abstract_universe) {
        if (!admits(ch.abstract_type, m.value())) {
          issue("universe value " + m.to_string() + " is not a " + ch.abstract_type.to_string());
        }
      }
    }
  }
  if (gal.f_component) {
    if (!gal.f_spec) {
      issue("unknown f component " + *gal.f_component);
    } else {
      const auto& iface = gal.f_spec->interface();
      for (const auto& in : iface.inputs) {
        const ChannelAbstraction* ch = gal.by_concrete(in.name);
        if (!ch || !(ch->concrete_type == in.type)) {
          issue("f component input " + in.name + " does not match a concrete channel");
        }
      }
      for (const auto& out : iface.outputs) {
        const ChannelAbstraction* ch = gal.by_abstract(out.name);
        if (!ch || !(ch->abstract_type == out.type)) {
          issue("f component output " + out.name + " does not match an abstract channel");
        }
      }
    }
  }
  return issues;
}

namespace {

void require_valid(const GaloisSpec& gal) {
  auto issues = check_galois(gal);
  if (!issues.empty()) throw SpecError(issues.front().message);
}

Message apply_f(const ChannelAbstraction& ch, const Message& concrete) {
  Lookup lookup = [&](const std::string& n) -> const Scalar* {
    return n == "c" ? &concrete.value() : nullptr;
  };
  Scalar v = evaluate(*ch.f, lookup);
  Message out = [&] {
    try {
      return coerce(ch.abstract_type, v);
    } catch (const EvaluationError& e) {
      throw DomainError("f of " + ch.concrete + ": " + e.what());
    }
  }();
  if (ch.abstract_universe &&
      std::find(ch.abstract_universe->begin(), ch.abstract_universe->end(), out) ==
          ch.abstract_universe->end()) {
    throw DomainError("f of " + ch.concrete + " maps " + concrete.to_string() + " to " +
                      out.to_string() + ", outside the declared abstract universe");
  }
  return out;
}

bool g_holds(const ChannelAbstraction& ch, const Message& a, const Message& c) {
  Lookup lookup = [&](const std::string& n) -> const Scalar* {
    if (n == "a") return &a.value();
    if (n == "c") return &c.value();
    return nullptr;
  };
  return evaluate_bool(ch.g, lookup);
}

}  // namespace

ChannelHistory abstract_output(const GaloisSpec& gal, const ChannelHistory& concrete) {
  require_valid(gal);
  for (const auto& [name, s] : concrete.bindings) {
    const ChannelAbstraction* ch = gal.by_concrete(name);
    if (!ch) throw SpecError("galois " + gal.name + " has no abstraction for channel " + name);
    if (!(s.elem_type() == ch->concrete_type)) {
      throw SpecError("channel " + name + " has type " + s.elem_type().to_string() +
                      ", galois expects " + ch->concrete_type.to_string());
    }
  }
  if (gal.f_component && std::any_of(gal.channels.begin(), gal.channels.end(),
                                     [](const ChannelAbstraction& c) { return !c.f; })) {
    ChannelHistory in(concrete.horizon);
    for (const auto& c : gal.f_spec->interface().inputs) {
      in.bindings.emplace(c.name, concrete.at(c.name));
    }
    return run(*gal.f_spec, in, concrete.horizon);
  }
  ChannelHistory out(concrete.horizon);
  for (const auto& [name, s] : concrete.bindings) {
    const ChannelAbstraction* ch = gal.by_concrete(name);
    TimedStream a(ch->abstract_type);
    for (const auto& m : s.messages()) a.push_back(apply_f(*ch, m));
    out.bindings.emplace(ch->abstract, std::move(a));
  }
  return out;
}

bool g_member(const GaloisSpec& gal, const ChannelHistory& abstract,
              const ChannelHistory& concrete) {
  if (abstract.horizon != concrete.horizon) return false;
  for (const auto& ch : gal.channels) {
    auto ai = abstract.bindings.find(ch.abstract);
    auto ci = concrete.bindings.find(ch.concrete);
    if (ai == abstract.bindings.end() || ci == concrete.bindings.end()) continue;
    for (std::size_t t = 0; t < abstract.horizon; ++t) {
      if (!g_holds(ch, ai->second.messages()[t], ci->second.messages()[t])) return false;
    }
  }
  return true;
}

ComponentSpec build_output_checker(const GaloisSpec& gal,
                                   const std::vector<std::string>& concrete_channels) {
  AutomatonSpec a;
  a.name = gal.name + "_checker";
  a.causality = Causality::Weak;
  a.states = {"Check"};
  a.initial_state = "Check";
  a.interface.outputs.push_back({"ok", DataType::boolean()});
  a.output_init.emplace("ok", Message::of(true));
  std::optional<Expr> all;
  for (const auto& name : concrete_channels) {
    const ChannelAbstraction* ch = gal.by_concrete(name);
    if (!ch) throw SpecError("galois " + gal.name + " has no abstraction for channel " + name);
    if (!ch->f) {
      throw UnsupportedError("galois " + gal.name + ": f of " + name +
                             " is not element-wise; supply a checker component");
    }
    std::string a_port = "a_" + ch->abstract;
    std::string c_port = "c_" + ch->concrete;
    a.interface.inputs.push_back({a_port, ch->abstract_type});
    a.interface.inputs.push_back({c_port, ch->concrete_type});
    Expr f_c = ch->f->substitute({{"c", Expr::ref(c_port)}});
    Expr eq = Expr::binary(Expr::Op::Eq, std::move(f_c), Expr::ref(a_port));
    all = all ? Expr::binary(Expr::Op::And, std::move(*all), std::move(eq)) : std::move(eq);
  }
  Transition t;
  t.name = "compare";
  t.source = "Check";
  t.target = "Check";
  t.guard = Expr::literal(true);
  t.assignments.push_back({"ok", all ? std::move(*all) : Expr::literal(true)});
  a.transitions.push_back(std::move(t));
  return ComponentSpec(std::move(a));
}

namespace {

std::vector<Message> abstract_values(const ChannelAbstraction& ch) {
  if (ch.abstract_universe) return *ch.abstract_universe;
  const DataType& t = ch.abstract_type;
  std::vector<Message> out;
  switch (t.kind()) {
    case DataType::Kind::Boolean:
      return {Message::of(false), Message::of(true)};
    case DataType::Kind::Enumeration:
      for (std::size_t i = 0; i < t.enum_def()->labels.size(); ++i) {
        out.emplace_back(t, EnumLabel{t.enum_def(), i});
      }
      return out;
    case DataType::Kind::Integer:
      if (t.cardinality() <= 4096) {
        for (std::int64_t v = t.lo();; ++v) {
          out.emplace_back(t, v);
          if (v == t.hi()) break;
        }
        return out;
      }
      break;
    case DataType::Kind::Real:
      break;
  }
  throw SpecError("abstract channel " + ch.abstract + " of type " + t.to_string() +
                  " needs an explicit universe");
}

// Count of histories of `horizon` ticks over channels with `sizes` values,
// saturated just above `cap`.
std::size_t history_count(const std::vector<std::size_t>& sizes, std::size_t horizon,
                          std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t t = 0; t < horizon; ++t) {
    for (auto s : sizes) {
      if (s == 0) return 0;
      if (total > (cap + 1) / s + 1) return cap + 1;
      total *= s;
    }
  }
  return total;
}

std::vector<ChannelHistory> histories(const std::vector<std::pair<Channel, std::vector<Message>>>& chans,
                                      std::size_t horizon, std::size_t count) {
  std::vector<ChannelHistory> out;
  if (count == 0) return out;
  std::vector<std::size_t> digits(chans.size() * horizon, 0);
  for (std::size_t k = 0; k < count; ++k) {
    ChannelHistory h(horizon);
    for (std::size_t c = 0; c < chans.size(); ++c) {
      TimedStream s(chans[c].first.type);
      for (std::size_t t = 0; t < horizon; ++t) {
        s.push_back(chans[c].second[digits[t * chans.size() + c]]);
      }
      h.bindings.emplace(chans[c].first.name, std::move(s));
    }
    out.push_back(std::move(h));
    for (std::size_t d = digits.size(); d-- > 0;) {
      if (++digits[d] < chans[d % chans.size()].second.size()) break;
      digits[d] = 0;
    }
  }
  return out;
}

}  // namespace

GaloisUniverse enumerate_universe(const GaloisSpec& gal, const GaloisCaps& caps) {
  require_valid(gal);
  if (gal.horizon > caps.max_horizon) {
    throw RefusalError("galois " + gal.name + ": horizon " + std::to_string(gal.horizon) +
                           " exceeds cap " + std::to_string(caps.max_horizon),
                       caps.max_elements, gal.horizon);
  }
  std::vector<std::pair<Channel, std::vector<Message>>> conc;
  std::vector<std::pair<Channel, std::vector<Message>>> abst;
  for (const auto& ch : gal.channels) {
    if (!ch.concrete_universe) continue;
    conc.push_back({Channel{ch.concrete, ch.concrete_type}, *ch.concrete_universe});
    abst.push_back({Channel{ch.abstract, ch.abstract_type}, abstract_values(ch)});
  }
  GaloisUniverse u;
  if (conc.empty()) return u;
  auto sizes = [](const auto& v) {
    std::vector<std::size_t> s;
    for (const auto& [c, vals] : v) s.push_back(vals.size());
    return s;
  };
  std::size_t nc = history_count(sizes(conc), gal.horizon, caps.max_elements);
  std::size_t na = history_count(sizes(abst), gal.horizon, caps.max_elements);
  if (nc > caps.max_elements || na > caps.max_elements) {
    std::size_t need = std::max(history_count(sizes(conc), gal.horizon, SIZE_MAX / 2),
                                history_count(sizes(abst), gal.horizon, SIZE_MAX / 2));
    throw RefusalError("galois " + gal.name + ": universe of " + std::to_string(need) +
                           " elements exceeds cap " + std::to_string(caps.max_elements) +
                           " per side",
                       need, gal.horizon);
  }
  u.concrete = histories(conc, gal.horizon, nc);
  u.abstract = histories(abst, gal.horizon, na);
  return u;
}

GaloisResult verify_galois(const GaloisSpec& gal, const GaloisCaps& caps,
                           GaloisOrientation orientation) {
  GaloisUniverse u = enumerate_universe(gal, caps);
  const std::size_t m = u.concrete.size();
  const std::size_t k = u.abstract.size();
  if (m > 62 || k > 62) throw RefusalError("universe too large for subset enumeration", std::max(m, k), gal.horizon);

  GaloisResult r;
  r.concrete_elements = m;
  r.abstract_elements = k;

  // f image of each concrete element, as an index into the abstract universe.
  std::vector<std::size_t> image(m);
  for (std::size_t i = 0; i < m; ++i) {
    ChannelHistory fa = abstract_output(gal, u.concrete[i]);
    auto it = std::find(u.abstract.begin(), u.abstract.end(), fa);
    if (it == u.abstract.end()) {
      throw SpecError("galois " + gal.name + ": f is not total on the universe (element " +
                      std::to_string(i) + " maps outside the abstract universe)");
    }
    image[i] = static_cast<std::size_t>(it - u.abstract.begin());
  }
  // g relation as bitmasks in both directions.
  std::vector<std::uint64_t> conc_of(k, 0);  // abstract j -> concretes
  std::vector<std::uint64_t> abst_of(m, 0);  // concrete i -> abstracts
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (g_member(gal, u.abstract[j], u.concrete[i])) {
        conc_of[j] |= std::uint64_t{1} << i;
        abst_of[i] |= std::uint64_t{1} << j;
      }
    }
  }

  const std::uint64_t n_tc = std::uint64_t{1} << m;
  const std::uint64_t n_ta = std::uint64_t{1} << k;
  std::vector<std::uint64_t> g_of_ta(n_ta, 0);
  for (std::uint64_t ta = 1; ta < n_ta; ++ta) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(ta));
    g_of_ta[ta] = g_of_ta[ta & (ta - 1)] | conc_of[low];
  }
  auto members = [](const std::vector<ChannelHistory>& all, std::uint64_t mask) {
    std::vector<ChannelHistory> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) out.push_back(all[i]);
    }
    return out;
  };

  std::uint64_t f_of_tc = 0;
  std::uint64_t g_of_tc = 0;
  for (std::uint64_t tc = 0; tc < n_tc; ++tc) {
    if (tc) {
      std::size_t low = static_cast<std::size_t>(__builtin_ctzll(tc));
      std::uint64_t rest = tc & (tc - 1);
      // Recompute from scratch for the residual set; cheap for <= 62 bits.
      f_of_tc = std::uint64_t{1} << image[low];
      g_of_tc = abst_of[low];
      for (std::uint64_t b = rest; b; b &= b - 1) {
        std::size_t i = static_cast<std::size_t>(__builtin_ctzll(b));
        f_of_tc |= std::uint64_t{1} << image[i];
        g_of_tc |= abst_of[i];
      }
    }
    for (std::uint64_t ta = 0; ta < n_ta; ++ta) {
      ++r.pairs_checked;
      bool lhs = (f_of_tc & ~ta) == 0;
      bool rhs = orientation == GaloisOrientation::Standard ? (tc & ~g_of_ta[ta]) == 0
                                                            : (ta & ~g_of_tc) == 0;
      if (lhs != rhs) {
        r.ok = false;
        r.counterexample =
            GaloisCounterexample{members(u.concrete, tc), members(u.abstract, ta), lhs, rhs};
        return r;
      }
    }
  }
  return r;
}

}  // namespace streamcheck
