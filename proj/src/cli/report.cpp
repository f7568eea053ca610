#include "report.hpp"

#include <algorithm>

namespace streamcheck::report {

ordered_json to_json(const Message& m) {
  const Scalar& v = m.value();
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<EnumLabel>(v).label();
}

ordered_json to_json(const TimedStream& s) {
  ordered_json a = ordered_json::array();
  for (const auto& m : s.messages()) a.push_back(to_json(m));
  return a;
}

ordered_json to_json(const ChannelHistory& h) {
  ordered_json o = ordered_json::object();
  for (const auto& [name, s] : h.bindings) o[name] = to_json(s);
  return o;
}

ordered_json to_json(const Divergence& d) {
  return {{"tick", d.tick},
          {"channel", d.channel},
          {"expected", to_json(d.expected)},
          {"actual", to_json(d.actual)}};
}

ordered_json to_json(const CaseReport& c) {
  ordered_json o;
  o["name"] = c.name;
  o["status"] = to_string(c.verdict.status);
  if (c.verdict.status == Verdict::Status::Error) {
    o["error"] = c.verdict.error;
  } else {
    o["outputs"] = to_json(c.actual);
  }
  ordered_json ds = ordered_json::array();
  for (const auto& d : c.verdict.divergences) ds.push_back(to_json(d));
  o["divergences"] = ds;
  o["log"] = c.verdict.log;
  return o;
}

ordered_json to_json(const CorrespondenceResult& r) {
  ordered_json o;
  o["status"] = to_string(r.status);
  if (r.status != CorrespondenceResult::Status::Error) {
    o["ri_holds"] = r.ri_holds;
    o["ro_holds"] = r.ro_holds;
    o["corresponding"] = r.corresponding;
    o["ri_per_tick"] = to_json(r.ri_per_tick);
    o["ro_per_tick"] = to_json(r.ro_per_tick);
    o["abstract_output"] = to_json(r.abstract_output);
    o["concrete_output"] = to_json(r.concrete_output);
  }
  o["diagnostics"] = r.diagnostics;
  return o;
}

namespace {

ordered_json set_json(const std::vector<ChannelHistory>& set) {
  ordered_json a = ordered_json::array();
  for (const auto& h : set) a.push_back(to_json(h));
  return a;
}

}  // namespace

ordered_json to_json(const GaloisResult& r) {
  ordered_json o;
  o["ok"] = r.ok;
  o["concrete_elements"] = r.concrete_elements;
  o["abstract_elements"] = r.abstract_elements;
  o["pairs_checked"] = r.pairs_checked;
  if (r.counterexample) {
    o["counterexample"] = {{"concrete_set", set_json(r.counterexample->concrete_set)},
                           {"abstract_set", set_json(r.counterexample->abstract_set)},
                           {"f_subset", r.counterexample->f_subset},
                           {"g_subset", r.counterexample->g_subset}};
  }
  return o;
}

ordered_json to_json(const CausalityResult& r) {
  ordered_json o;
  o["status"] = r.status == CausalityResult::Status::Ok               ? "ok"
                : r.status == CausalityResult::Status::Counterexample ? "counterexample"
                                                                      : "error";
  o["mode"] = r.mode == Causality::Strict ? "strict" : "weak";
  o["exhaustive"] = r.exhaustive;
  o["histories"] = r.histories;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    o["counterexample"] = {{"agree_ticks", c.agree_ticks},   {"diverge_tick", c.diverge_tick},
                           {"channel", c.channel},           {"input1", to_json(c.input1)},
                           {"input2", to_json(c.input2)},    {"output1", to_json(c.output1)},
                           {"output2", to_json(c.output2)}};
  }
  if (!r.error.empty()) o["error"] = r.error;
  return o;
}

std::string render(const TimedStream& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.horizon(); ++i) out += (i ? "," : "") + s.messages()[i].to_string();
  return out + "]";
}

std::string render(const ChannelHistory& h) {
  std::string out;
  for (const auto& [name, s] : h.bindings) out += (out.empty() ? "" : " ") + name + "=" + render(s);
  return out.empty() ? "(no channels)" : out;
}

std::string render(const std::vector<ChannelHistory>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "; " : " ") + render(set[i]);
  return out + (set.empty() ? "}" : " }");
}

std::string table(const ChannelHistory& inputs, const ChannelHistory& outputs, std::size_t ticks) {
  std::vector<std::vector<std::string>> cols;
  auto add = [&](const std::string& name, const TimedStream& s) {
    std::vector<std::string> col{name};
    for (std::size_t t = 0; t < ticks; ++t) col.push_back(t < s.horizon() ? s.messages()[t].to_string() : "");
    cols.push_back(std::move(col));
  };
  std::vector<std::string> tick{"tick"};
  for (std::size_t t = 1; t <= ticks; ++t) tick.push_back(std::to_string(t));
  cols.push_back(std::move(tick));
  for (const auto& [name, s] : inputs.bindings) add(name, s);
  for (const auto& [name, s] : outputs.bindings) add(name, s);
  std::string out;
  for (std::size_t row = 0; row <= ticks; ++row) {
    std::string line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::size_t w = 0;
      for (const auto& cell : cols[c]) w = std::max(w, cell.size());
      std::string cell = cols[c][row];
      if (c + 1 < cols.size()) cell.resize(w + 2, ' ');
      line += cell;
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace streamcheck::report
