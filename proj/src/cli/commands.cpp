#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "streamcheck/abstraction/concretizer.hpp"
#include "streamcheck/abstraction/correspondence.hpp"
#include "streamcheck/abstraction/galois.hpp"
#include "streamcheck/cli/cli.hpp"
#include "streamcheck/format/document.hpp"
#include "streamcheck/format/test_vectors.hpp"
#include "streamcheck/model/causality.hpp"
#include "streamcheck/testing/test_case.hpp"

namespace streamcheck {

namespace {

using report::ordered_json;

// Bad flags or names; exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::string command;
  std::string model;
  std::string component;
  std::vector<std::string> vectors;
  std::string concrete_vectors;
  std::string refinement;
  std::string galois;
  std::string concretizer;
  std::string out_path;
  std::optional<std::size_t> ticks;
  double eps = 0.0;
  std::string caps = "12,3";
  std::uint64_t seed = 0;
  std::string format = "human";
  std::vector<std::string> params;
  std::string mode;
  std::size_t budget = 1000;
  std::size_t samples = 0;
  bool permissive = false;
  bool literal = false;
};

// Collects the human text and the structured document of one invocation.
struct Output {
  std::ostringstream human;
  std::vector<std::string> warnings;
  ordered_json doc = ordered_json::object();
};

bool color_enabled() {
  const char* v = std::getenv("STREAMCHECK_COLOR");
  if (!v) return false;
  std::string s(v);
  return s == "1" || s == "true" || s == "always" || s == "yes" || s == "on";
}

std::string available(const ModelDocument& doc) {
  std::string out;
  for (const auto& c : doc.components) out += (out.empty() ? "" : ", ") + c->name();
  return out.empty() ? "none" : out;
}

std::shared_ptr<const ComponentSpec> need_component(const ModelDocument& doc, const std::string& name) {
  if (name.empty()) throw UsageError("--component is required");
  auto c = doc.component(name);
  if (!c) throw UsageError("unknown component " + name + " (available: " + available(doc) + ")");
  return c;
}

std::shared_ptr<const RefinementSpec> need_refinement(const ModelDocument& doc, const std::string& name) {
  if (name.empty()) throw UsageError("--refinement is required");
  auto r = doc.refinement(name);
  if (!r) throw UsageError("unknown refinement " + name);
  return r;
}

std::pair<std::string, std::string> split_param(const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got " + kv);
  return {kv.substr(0, eq), kv.substr(eq + 1)};
}

// Type of a (possibly instance-qualified) parameter of a component.
std::optional<DataType> param_type(const ComponentSpec& spec, const std::string& key) {
  if (spec.is_automaton()) {
    for (const auto& p : spec.automaton().params) {
      if (p.name == key) return p.type;
    }
    return std::nullopt;
  }
  auto dot = key.find('.');
  if (dot == std::string::npos) return std::nullopt;
  const Subcomponent* sub = spec.composite().find(key.substr(0, dot));
  if (!sub || !sub->spec) return std::nullopt;
  return param_type(*sub->spec, key.substr(dot + 1));
}

SimOptions sim_options(const Config& cfg, const ComponentSpec& spec) {
  SimOptions o;
  o.permissive = cfg.permissive;
  for (const auto& kv : cfg.params) {
    auto [name, text] = split_param(kv);
    auto ty = param_type(spec, name);
    if (!ty) throw UsageError("component " + spec.name() + " has no parameter " + name);
    auto m = parse_message(*ty, text);
    if (!m) throw UsageError("invalid value " + text + " for parameter " + name);
    o.params.insert_or_assign(name, *m);
  }
  return o;
}

std::vector<VectorCase> load_all(const std::vector<std::string>& paths, const SyntacticInterface& iface) {
  std::vector<VectorCase> out;
  for (const auto& p : paths) {
    auto cases = load_testcases_file(p, iface);
    out.insert(out.end(), cases.begin(), cases.end());
  }
  return out;
}

// ---- simulate

int cmd_simulate(const Config& cfg, const ModelDocument& doc, Output& o) {
  auto spec = need_component(doc, cfg.component);
  SimOptions opts = sim_options(cfg, *spec);
  std::vector<VectorCase> cases;
  if (!cfg.vectors.empty()) {
    cases = load_all(cfg.vectors, spec->interface());
  } else if (spec->interface().inputs.empty() && cfg.ticks) {
    VectorCase vc;
    vc.test.name = "run";
    vc.test.input = ChannelHistory(*cfg.ticks);
    cases.push_back(std::move(vc));
  } else {
    throw UsageError("--vectors is required for a component with inputs");
  }
  Simulator sim(*spec, opts);
  o.doc["component"] = spec->name();
  ordered_json runs = ordered_json::array();
  for (const auto& c : cases) {
    std::size_t n = cfg.ticks.value_or(c.test.input.horizon);
    if (n > c.test.input.horizon) {
      throw UsageError("--ticks " + std::to_string(n) + " exceeds the " +
                       std::to_string(c.test.input.horizon) + " ticks of case " + c.test.name);
    }
    ChannelHistory out = sim.run(c.test.input, n);
    ChannelHistory shown_in = prefix(c.test.input, n);
    o.human << "case " << c.test.name << " (" << n << " ticks)\n" << report::table(shown_in, out, n);
    runs.push_back({{"name", c.test.name},
                    {"ticks", n},
                    {"inputs", report::to_json(shown_in)},
                    {"outputs", report::to_json(out)}});
  }
  o.doc["cases"] = runs;
  return kExitOk;
}

// ---- test

int cmd_test(const Config& cfg, const ModelDocument& doc, Output& o, const report::Style& st) {
  auto spec = need_component(doc, cfg.component);
  if (cfg.vectors.empty()) throw UsageError("--vectors is required");
  SimOptions opts = sim_options(cfg, *spec);
  std::vector<TestCase> suite;
  for (auto& c : load_all(cfg.vectors, spec->interface())) suite.push_back(std::move(c.test));
  SuiteReport rep = suite_run(*spec, suite, cfg.eps, opts);
  ordered_json cases = ordered_json::array();
  for (const auto& c : rep.cases) {
    cases.push_back(report::to_json(c));
    switch (c.verdict.status) {
      case Verdict::Status::Pass:
        o.human << st.good("PASS") << "  " << c.name << "\n";
        break;
      case Verdict::Status::Fail:
        o.human << st.bad("FAIL") << "  " << c.name << "\n";
        for (const auto& d : c.verdict.divergences) {
          o.human << "      tick " << d.tick << " " << d.channel << ": expected " << d.expected.to_string()
                  << ", got " << d.actual.to_string() << "\n";
        }
        for (const auto& line : c.verdict.log) o.human << "      " << line << "\n";
        break;
      case Verdict::Status::Error:
        o.human << st.bad("ERROR") << " " << c.name << ": " << c.verdict.error << "\n";
        break;
    }
  }
  o.human << rep.passed << " passed, " << rep.failed << " failed, " << rep.errors << " errors\n";
  o.doc["component"] = spec->name();
  o.doc["summary"] = {{"passed", rep.passed}, {"failed", rep.failed}, {"errors", rep.errors}};
  o.doc["cases"] = cases;
  if (rep.errors) return kExitSimulation;
  return rep.failed ? kExitFailure : kExitOk;
}

// ---- concretize / check

std::shared_ptr<const ConcretizerSpec> pick_concretizer(const Config& cfg, const ModelDocument& doc,
                                                        const RefinementSpec* ref) {
  if (!cfg.concretizer.empty()) {
    auto c = doc.concretizer(cfg.concretizer);
    if (!c) throw UsageError("unknown concretizer " + cfg.concretizer);
    return c;
  }
  if (ref && ref->concretizer) return ref->concretizer;
  throw UsageError(ref ? "refinement " + ref->name + " has no concretizer" : "--refinement or --concretizer is required");
}

ParamBinding binding_for(const Config& cfg, const ConcretizerSpec& conc, const VectorCase& c) {
  ParamBinding b = bind_params(conc, c.params, c.test.input.horizon);
  for (const auto& kv : cfg.params) {
    auto [name, text] = split_param(kv);
    const ConcretizerParam* p = conc.find(name);
    if (!p) throw UsageError("concretizer " + conc.name + " has no parameter " + name);
    auto m = parse_message(p->type, text);
    if (!m) throw UsageError("invalid value " + text + " for parameter " + name);
    if (p->kind == ConcretizerParam::Kind::Constant) {
      b.constants.insert_or_assign(name, *m);
    } else {
      TimedStream s(p->type);
      for (std::size_t t = 0; t < c.test.input.horizon; ++t) s.push_back(*m);
      b.streams.insert_or_assign(name, std::move(s));
    }
  }
  return b;
}

SyntacticInterface abstract_iface(const ConcretizerSpec& conc, const RefinementSpec* ref) {
  if (ref && ref->abstract) return ref->abstract->interface();
  return {abstract_inputs(conc), {}};
}

std::string false_ticks(const TimedStream& s) {
  std::string out;
  for (std::size_t t = 0; t < s.horizon(); ++t) {
    if (!s.messages()[t].as_bool()) out += (out.empty() ? "" : ",") + std::to_string(t + 1);
  }
  return out;
}

int cmd_concretize(const Config& cfg, const ModelDocument& doc, Output& o) {
  std::shared_ptr<const RefinementSpec> ref;
  if (!cfg.refinement.empty()) ref = need_refinement(doc, cfg.refinement);
  auto conc = pick_concretizer(cfg, doc, ref.get());
  if (cfg.vectors.empty()) throw UsageError("--vectors is required");
  auto cases = load_all(cfg.vectors, abstract_iface(*conc, ref.get()));
  std::vector<VectorCase> produced;
  ordered_json js = ordered_json::array();
  for (const auto& c : cases) {
    ParamBinding b = binding_for(cfg, *conc, c);
    ChannelHistory tc = concretize(*conc, b, c.test.input);
    ordered_json entry = {{"name", c.test.name}, {"input", report::to_json(tc)}};
    if (ref && ref->ri) {
      ChannelHistory ta = c.test.input;
      RelationResult ri = eval_relation(*ref->ri, ta, tc);
      entry["ri_holds"] = ri.holds;
      if (!ri.holds) {
        o.warnings.push_back("case " + c.test.name + ": RI " + ref->ri->name + " fails at ticks " +
                             false_ticks(ri.per_tick));
      }
    }
    js.push_back(std::move(entry));
    VectorCase out;
    out.test.name = c.test.name;
    out.test.input = std::move(tc);
    produced.push_back(std::move(out));
  }
  std::string text = serialize_testcases(produced);
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out_path);
    f << text;
    o.human << "wrote " << produced.size() << " concrete test inputs to " << cfg.out_path << "\n";
  } else {
    o.human << text;
  }
  o.doc["concretizer"] = conc->name;
  o.doc["cases"] = js;
  o.doc["vectors"] = text;
  return kExitOk;
}

int cmd_check(const Config& cfg, const ModelDocument& doc, Output& o, const report::Style& st) {
  auto ref = need_refinement(doc, cfg.refinement);
  if (!ref->abstract || !ref->concrete || !ref->ri || !ref->ro) {
    throw UsageError("refinement " + ref->name + " is incomplete");
  }
  if (cfg.vectors.empty()) throw UsageError("--vectors is required");
  auto abstract_cases = load_all(cfg.vectors, ref->abstract->interface());
  std::map<std::string, ChannelHistory> concrete;
  if (!cfg.concrete_vectors.empty()) {
    for (auto& c : load_testcases_file(cfg.concrete_vectors, ref->concrete->interface())) {
      concrete.emplace(c.test.name, std::move(c.test.input));
    }
  } else {
    auto conc = pick_concretizer(cfg, doc, ref.get());
    for (const auto& c : abstract_cases) {
      concrete.emplace(c.test.name, concretize(*conc, binding_for(cfg, *conc, c), c.test.input));
    }
  }
  CorrespondenceOptions copts;
  copts.abstract_sim.permissive = cfg.permissive;
  copts.concrete_sim.permissive = cfg.permissive;
  bool all = true;
  bool error = false;
  ordered_json js = ordered_json::array();
  for (const auto& c : abstract_cases) {
    auto it = concrete.find(c.test.name);
    if (it == concrete.end()) throw UsageError("no concrete input for case " + c.test.name);
    CorrespondenceResult r =
        check_correspondence(*ref->abstract, *ref->concrete, *ref->ri, *ref->ro, c.test.input, it->second, copts);
    ordered_json e = report::to_json(r);
    ordered_json entry = {{"name", c.test.name}, {"concrete_input", report::to_json(it->second)}};
    entry.update(e);
    js.push_back(std::move(entry));
    switch (r.status) {
      case CorrespondenceResult::Status::Corresponding:
        o.human << st.good("OK") << "    " << c.test.name << ": corresponding (RI " << (r.ri_holds ? "holds" : "fails")
                << ", RO " << (r.ro_holds ? "holds" : "fails") << ")\n";
        if (!r.ri_holds) {
          o.warnings.push_back("case " + c.test.name + ": RI fails at ticks " + false_ticks(r.ri_per_tick) +
                               "; correspondence holds vacuously");
        }
        break;
      case CorrespondenceResult::Status::NotCorresponding:
        all = false;
        o.human << st.bad("FAIL") << "  " << c.test.name << ": not corresponding; RO false at ticks "
                << false_ticks(r.ro_per_tick) << "\n";
        o.human << "      abstract output: " << report::render(r.abstract_output) << "\n";
        o.human << "      concrete output: " << report::render(r.concrete_output) << "\n";
        break;
      case CorrespondenceResult::Status::Error:
        error = true;
        o.human << st.bad("ERROR") << " " << c.test.name << ": "
                << (r.diagnostics.empty() ? "" : r.diagnostics.front()) << "\n";
        break;
    }
  }
  o.doc["refinement"] = ref->name;
  o.doc["cases"] = js;
  if (error) return kExitSimulation;
  return all ? kExitOk : kExitFailure;
}

// ---- verify-galois

GaloisCaps parse_caps(const std::string& text) {
  GaloisCaps caps;
  auto comma = text.find(',');
  auto num = [&](const std::string& s) {
    std::size_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
      throw UsageError("--caps expects ELEMENTS[,HORIZON], got " + text);
    }
    return v;
  };
  caps.max_elements = num(text.substr(0, comma));
  if (comma != std::string::npos) caps.max_horizon = num(text.substr(comma + 1));
  if (caps.max_elements > 62) throw UsageError("--caps elements must be at most 62");
  return caps;
}

int cmd_verify_galois(const Config& cfg, const ModelDocument& doc, Output& o, const report::Style& st) {
  std::shared_ptr<const RefinementSpec> ref;
  if (!cfg.refinement.empty()) ref = need_refinement(doc, cfg.refinement);
  std::shared_ptr<const GaloisSpec> gal;
  if (!cfg.galois.empty()) {
    gal = doc.galois_spec(cfg.galois);
    if (!gal) throw UsageError("unknown galois " + cfg.galois);
  } else if (ref && ref->galois) {
    gal = ref->galois;
  } else {
    throw UsageError(ref ? "refinement " + ref->name + " has no galois" : "--galois or --refinement is required");
  }
  GaloisCaps caps = parse_caps(cfg.caps);
  if (cfg.ticks) {
    if (*cfg.ticks == 0) throw UsageError("--ticks must be positive");
    auto g = std::make_shared<GaloisSpec>(*gal);
    g->horizon = *cfg.ticks;
    gal = g;
  }
  auto orientation = cfg.literal ? GaloisOrientation::Literal : GaloisOrientation::Standard;
  GaloisResult r;
  try {
    r = verify_galois(*gal, caps, orientation);
  } catch (const RefusalError& e) {
    o.doc["refusal"] = {{"message", e.what()},
                        {"required_elements", e.required_elements()},
                        {"required_horizon", e.required_horizon()}};
    throw;
  }
  o.doc["galois"] = gal->name;
  o.doc["orientation"] = cfg.literal ? "literal" : "standard";
  o.doc["result"] = report::to_json(r);
  int code = kExitOk;
  if (r.ok) {
    o.human << st.good("OK") << "    galois " << gal->name << ": " << r.concrete_elements << " concrete and "
            << r.abstract_elements << " abstract elements, " << r.pairs_checked << " subset pairs\n";
  } else {
    const auto& c = *r.counterexample;
    const char* rhs = cfg.literal ? "Ta ⊆ g(Tc)" : "Tc ⊆ g(Ta)";
    o.human << st.bad("FAIL") << "  galois " << gal->name << ": counterexample\n"
            << "      Tc = " << report::render(c.concrete_set) << "\n"
            << "      Ta = " << report::render(c.abstract_set) << "\n"
            << "      f(Tc) ⊆ Ta is " << (c.f_subset ? "true" : "false") << ", " << rhs << " is "
            << (c.g_subset ? "true" : "false") << "\n";
    code = kExitFailure;
  }
  if (cfg.samples > 0) {
    auto conc = pick_concretizer(cfg, doc, ref.get());
    std::mt19937_64 rng(cfg.seed);
    std::size_t horizon = cfg.ticks.value_or(3);
    std::vector<ConcretizationSample> samples;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      ConcretizationSample s;
      s.params = sample_binding(*conc, horizon, rng);
      s.input = ChannelHistory(horizon);
      for (const auto& ch : abstract_inputs(*conc)) {
        TimedStream ts(ch.type);
        for (std::size_t t = 0; t < horizon; ++t) ts.push_back(sample_message(ch.type, rng));
        s.input.bindings.emplace(ch.name, std::move(ts));
      }
      samples.push_back(std::move(s));
    }
    FinvResult fr = check_finv_in_g(*gal, *conc, samples);
    ordered_json fj = {{"ok", fr.ok}, {"samples", fr.samples_checked}, {"seed", cfg.seed}};
    if (fr.ok) {
      o.human << st.good("OK") << "    f⁻¹ ⊆ g on " << fr.samples_checked << " samples (seed " << cfg.seed << ")\n";
    } else {
      const auto& ce = *fr.counterexample;
      fj["counterexample"] = {{"sample", ce.sample_index},
                              {"abstract", report::to_json(ce.sample.input)},
                              {"concrete", report::to_json(ce.concrete)}};
      o.human << st.bad("FAIL") << "  f⁻¹ ⊆ g: sample " << ce.sample_index << " "
              << report::render(ce.sample.input) << " concretizes to " << report::render(ce.concrete)
              << ", not a g-member\n";
      code = kExitFailure;
    }
    o.doc["finv_in_g"] = fj;
  }
  return code;
}

// ---- causality

int cmd_causality(const Config& cfg, const ModelDocument& doc, Output& o, const report::Style& st) {
  std::vector<std::shared_ptr<const ComponentSpec>> specs;
  if (cfg.component.empty()) {
    specs = doc.components;
  } else {
    specs.push_back(need_component(doc, cfg.component));
  }
  CausalityOptions base;
  base.horizon = cfg.ticks.value_or(3);
  base.seed = cfg.seed;
  base.budget = cfg.budget;
  if (cfg.mode == "strict") {
    base.mode = Causality::Strict;
  } else if (cfg.mode == "weak") {
    base.mode = Causality::Weak;
  } else if (!cfg.mode.empty()) {
    throw UsageError("--mode expects strict or weak");
  }
  o.human << "seed " << cfg.seed << "\n";
  o.doc["seed"] = cfg.seed;
  bool error = false;
  bool all = true;
  ordered_json js = ordered_json::array();
  for (const auto& spec : specs) {
    CausalityOptions opts = base;
    opts.sim = sim_options(cfg, *spec);
    CausalityResult r = check_causality(*spec, opts);
    ordered_json e = report::to_json(r);
    ordered_json entry = {{"component", spec->name()}};
    entry.update(e);
    js.push_back(std::move(entry));
    std::string how = std::string(r.mode == Causality::Strict ? "strict" : "weak") + ", " +
                      (r.exhaustive ? "exhaustive" : "random") + ", " + std::to_string(r.histories) +
                      " histories";
    switch (r.status) {
      case CausalityResult::Status::Ok:
        o.human << st.good("OK") << "    " << spec->name() << " (" << how << ")\n";
        break;
      case CausalityResult::Status::Counterexample: {
        all = false;
        const auto& c = *r.counterexample;
        o.human << st.bad("FAIL") << "  " << spec->name() << " (" << how << "): inputs agree on "
                << c.agree_ticks << " ticks, " << c.channel << " differs at tick " << c.diverge_tick << "\n"
                << "      input 1: " << report::render(c.input1) << " -> " << report::render(c.output1) << "\n"
                << "      input 2: " << report::render(c.input2) << " -> " << report::render(c.output2) << "\n";
        break;
      }
      case CausalityResult::Status::Error:
        error = true;
        o.human << st.bad("ERROR") << " " << spec->name() << ": " << r.error << "\n";
        break;
    }
  }
  o.doc["components"] = js;
  if (error) return kExitSimulation;
  return all ? kExitOk : kExitFailure;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--model", cfg.model, "Model file (.scm.txt)")->required();
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "structured"}));
  sub->add_flag("--permissive", cfg.permissive, "Resolve overlapping guards by declaration order");
}

int dispatch(const Config& cfg, const ModelDocument& doc, Output& o, const report::Style& st) {
  if (cfg.command == "simulate") return cmd_simulate(cfg, doc, o);
  if (cfg.command == "test") return cmd_test(cfg, doc, o, st);
  if (cfg.command == "concretize") return cmd_concretize(cfg, doc, o);
  if (cfg.command == "check") return cmd_check(cfg, doc, o, st);
  if (cfg.command == "verify-galois") return cmd_verify_galois(cfg, doc, o, st);
  return cmd_causality(cfg, doc, o, st);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Simulate and test timed-stream component models", "streamcheck"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Run a component on input vectors");
  auto* test = app.add_subcommand("test", "Run test cases and compare with expected results");
  auto* conc = app.add_subcommand("concretize", "Turn abstract test inputs into concrete ones");
  auto* check = app.add_subcommand("check", "Check abstract/concrete correspondence via RI and RO");
  auto* gal = app.add_subcommand("verify-galois", "Exhaustively check the Galois connection");
  auto* caus = app.add_subcommand("causality", "Search for causality violations");
  for (auto* s : {sim, test, conc, check, gal, caus}) add_common(s, cfg);

  for (auto* s : {sim, test, caus}) {
    s->add_option("--component", cfg.component, "Component name");
    s->add_option("--param", cfg.params, "Constant parameter name=value");
  }
  for (auto* s : {sim, test, conc, check}) s->add_option("--vectors", cfg.vectors, "Test vector files (.tv.csv)");
  for (auto* s : {conc, check, gal}) {
    s->add_option("--refinement", cfg.refinement, "Refinement name");
    s->add_option("--concretizer", cfg.concretizer, "Concretizer name");
  }
  for (auto* s : {conc, check}) s->add_option("--param", cfg.params, "Concretizer parameter name=value");
  for (auto* s : {sim, gal, caus}) s->add_option("--ticks", cfg.ticks, "Number of ticks / horizon");
  for (auto* s : {gal, caus}) s->add_option("--seed", cfg.seed, "Random seed");
  test->add_option("--eps", cfg.eps, "Absolute tolerance for reals")->check(CLI::NonNegativeNumber);
  check->add_option("--concrete-vectors", cfg.concrete_vectors, "Concrete inputs paired by case name");
  conc->add_option("--out", cfg.out_path, "Write the concrete vectors here instead of stdout");
  gal->add_option("--galois", cfg.galois, "Galois spec name");
  gal->add_option("--caps", cfg.caps, "Enumeration caps ELEMENTS[,HORIZON]");
  gal->add_flag("--literal", cfg.literal, "Check the literal form f(Tc) ⊆ Ta iff Ta ⊆ g(Tc)");
  gal->add_option("--samples", cfg.samples, "Also check f⁻¹ ⊆ g on this many random samples");
  caus->add_option("--budget", cfg.budget, "Random trials when enumeration is too large");
  caus->add_option("--mode", cfg.mode, "Property to check: strict or weak");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  for (auto* s : app.get_subcommands()) cfg.command = s->get_name();

  const bool json = cfg.format != "human";
  report::Style style(!json && color_enabled());
  Output o;
  o.doc["command"] = cfg.command;
  int code = kExitOk;
  std::string error;
  try {
    ModelDocument doc = load_model_file(cfg.model);
    code = dispatch(cfg, doc, o, style);
  } catch (const ParseError& e) {
    code = kExitUsage;
    error = e.what();
  } catch (const UsageError& e) {
    code = kExitUsage;
    error = e.what();
  } catch (const RefusalError& e) {
    code = kExitUsage;
    error = std::string("refused: ") + e.what() + " (needs --caps " + std::to_string(e.required_elements()) + "," +
            std::to_string(e.required_horizon()) + ")";
  } catch (const SimulationError& e) {
    code = kExitSimulation;
    error = e.what();
  } catch (const EvaluationError& e) {
    code = kExitSimulation;
    error = e.what();
  } catch (const Error& e) {
    code = kExitUsage;
    error = e.what();
  }

  for (const auto& w : o.warnings) err << style.warn("warning: ") << w << "\n";
  if (!error.empty()) err << "error: " << error << "\n";
  if (json) {
    o.doc["status"] = code == kExitOk ? "ok" : code == kExitFailure ? "failure" : "error";
    o.doc["exit_code"] = code;
    if (!error.empty()) o.doc["error"] = error;
    if (!o.warnings.empty()) o.doc["warnings"] = o.warnings;
    out << o.doc.dump(2) << "\n";
  } else {
    out << o.human.str();
  }
  return code;
}

}  // namespace streamcheck
