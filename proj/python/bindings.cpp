#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "streamcheck/abstraction/concretizer.hpp"
#include "streamcheck/abstraction/correspondence.hpp"
#include "streamcheck/abstraction/galois.hpp"
#include "streamcheck/cli/cli.hpp"
#include "streamcheck/error.hpp"
#include "streamcheck/format/document.hpp"
#include "streamcheck/format/test_vectors.hpp"
#include "streamcheck/model/causality.hpp"
#include "streamcheck/model/simulator.hpp"
#include "streamcheck/testing/test_case.hpp"

namespace py = pybind11;
using namespace streamcheck;

namespace {

py::object to_py(const Message& m) {
  const Scalar& v = m.value();
  if (auto b = std::get_if<bool>(&v)) return py::bool_(*b);
  if (auto i = std::get_if<std::int64_t>(&v)) return py::int_(*i);
  if (auto d = std::get_if<double>(&v)) return py::float_(*d);
  return py::str(std::get<EnumLabel>(v).label());
}

py::dict to_py(const ChannelHistory& h) {
  py::dict d;
  for (const auto& [name, s] : h.bindings) {
    py::list l;
    for (const auto& m : s.messages()) l.append(to_py(m));
    d[py::str(name)] = l;
  }
  return d;
}

Message from_py(const DataType& t, const py::handle& o, const std::string& where) {
  try {
    switch (t.kind()) {
      case DataType::Kind::Boolean:
        if (!py::isinstance<py::bool_>(o)) break;
        return Message(t, o.cast<bool>());
      case DataType::Kind::Integer:
        if (!py::isinstance<py::int_>(o) || py::isinstance<py::bool_>(o)) break;
        return Message(t, o.cast<std::int64_t>());
      case DataType::Kind::Real:
        if (py::isinstance<py::bool_>(o) || !(py::isinstance<py::float_>(o) || py::isinstance<py::int_>(o))) break;
        return Message(t, o.cast<double>());
      case DataType::Kind::Enumeration:
        if (!py::isinstance<py::str>(o)) break;
        if (auto m = parse_message(t, o.cast<std::string>())) return *m;
        break;
    }
  } catch (const py::cast_error&) {
  }
  throw DomainError("invalid value " + py::repr(o).cast<std::string>() + " for " + where + " (" +
                    t.to_string() + ")");
}

ChannelHistory history_from(const std::vector<Channel>& channels, const py::dict& values) {
  std::map<std::string, TimedStream> b;
  for (const auto& [k, v] : values) {
    auto name = k.cast<std::string>();
    const Channel* ch = nullptr;
    for (const auto& c : channels) {
      if (c.name == name) ch = &c;
    }
    if (!ch) throw SpecError("unknown channel " + name);
    TimedStream s(ch->type);
    for (const auto& x : v.cast<py::sequence>()) s.push_back(from_py(ch->type, x, name));
    b.emplace(name, std::move(s));
  }
  return ChannelHistory(std::move(b));
}

Valuation params_from(const ComponentSpec& spec, const py::dict& values) {
  Valuation out;
  for (const auto& [k, v] : values) {
    auto key = k.cast<std::string>();
    if (!spec.is_automaton()) throw SpecError("parameters of composites are not supported here");
    const Parameter* p = nullptr;
    for (const auto& q : spec.automaton().params) {
      if (q.name == key) p = &q;
    }
    if (!p) throw SpecError("unknown parameter " + key);
    out.emplace(key, from_py(p->type, v, key));
  }
  return out;
}

const ComponentSpec& need_component(const ModelDocument& doc, const std::string& name) {
  auto c = doc.component(name);
  if (!c) throw SpecError("unknown component " + name);
  return *c;
}

py::dict verdict_dict(const CaseReport& c) {
  py::dict d;
  d["name"] = c.name;
  d["status"] = to_string(c.verdict.status);
  d["outputs"] = to_py(c.actual);
  py::list divs;
  for (const auto& x : c.verdict.divergences) {
    py::dict e;
    e["tick"] = x.tick;
    e["channel"] = x.channel;
    e["expected"] = to_py(x.expected);
    e["actual"] = to_py(x.actual);
    divs.append(e);
  }
  d["divergences"] = divs;
  if (!c.verdict.error.empty()) d["error"] = c.verdict.error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Timed-stream component models: simulation, testing and abstraction checks";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SpecError>(m, "SpecError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SimulationError>(m, "SimulationError", base.ptr());
  py::register_exception<RefusalError>(m, "RefusalError", base.ptr());

  py::class_<ModelDocument>(m, "Model")
      .def_property_readonly("components",
                             [](const ModelDocument& d) {
                               std::vector<std::string> out;
                               for (const auto& c : d.components) out.push_back(c->name());
                               return out;
                             })
      .def_property_readonly("refinements",
                             [](const ModelDocument& d) {
                               std::vector<std::string> out;
                               for (const auto& r : d.refinements) out.push_back(r->name);
                               return out;
                             })
      .def("interface",
           [](const ModelDocument& d, const std::string& name) {
             const auto& ifc = need_component(d, name).interface();
             py::dict in, out;
             for (const auto& c : ifc.inputs) in[py::str(c.name)] = c.type.to_string();
             for (const auto& c : ifc.outputs) out[py::str(c.name)] = c.type.to_string();
             return py::make_tuple(in, out);
           })
      .def("serialize", &serialize_model)
      .def("__eq__", [](const ModelDocument& a, const ModelDocument& b) { return a == b; });

  m.def("parse_model", [](const std::string& text) { return load_model(text); }, py::arg("text"));
  m.def("load_model", &load_model_file, py::arg("path"));

  m.def(
      "simulate",
      [](const ModelDocument& doc, const std::string& component, const py::dict& inputs,
         std::optional<std::size_t> ticks, const py::dict& params, bool permissive) {
        const auto& spec = need_component(doc, component);
        auto h = history_from(spec.interface().inputs, inputs);
        SimOptions opts;
        opts.permissive = permissive;
        opts.params = params_from(spec, params);
        return to_py(run(spec, h, ticks.value_or(h.horizon), opts));
      },
      py::arg("model"), py::arg("component"), py::arg("inputs"), py::arg("ticks") = py::none(),
      py::arg("params") = py::dict(), py::arg("permissive") = false);

  m.def(
      "run_tests",
      [](const ModelDocument& doc, const std::string& component, const std::string& vectors, double eps) {
        const auto& spec = need_component(doc, component);
        std::vector<TestCase> suite;
        for (auto& c : load_testcases_file(vectors, spec.interface())) suite.push_back(std::move(c.test));
        auto rep = suite_run(spec, suite, eps);
        py::dict d;
        d["passed"] = rep.passed;
        d["failed"] = rep.failed;
        d["errors"] = rep.errors;
        py::list cases;
        for (const auto& c : rep.cases) cases.append(verdict_dict(c));
        d["cases"] = cases;
        return d;
      },
      py::arg("model"), py::arg("component"), py::arg("vectors"), py::arg("eps") = 0.0);

  m.def(
      "check_correspondence",
      [](const ModelDocument& doc, const std::string& refinement, const py::dict& abstract_inputs,
         const py::dict& concrete_inputs) {
        auto ref = doc.refinement(refinement);
        if (!ref) throw SpecError("unknown refinement " + refinement);
        auto ta = history_from(ref->abstract->interface().inputs, abstract_inputs);
        auto tc = history_from(ref->concrete->interface().inputs, concrete_inputs);
        auto r = check_correspondence(*ref->abstract, *ref->concrete, *ref->ri, *ref->ro, ta, tc);
        py::dict d;
        d["status"] = to_string(r.status);
        d["ri_holds"] = r.ri_holds;
        d["ro_holds"] = r.ro_holds;
        d["corresponding"] = r.corresponding;
        d["abstract_output"] = to_py(r.abstract_output);
        d["concrete_output"] = to_py(r.concrete_output);
        d["diagnostics"] = r.diagnostics;
        return d;
      },
      py::arg("model"), py::arg("refinement"), py::arg("abstract_inputs"), py::arg("concrete_inputs"));

  m.def(
      "verify_galois",
      [](const ModelDocument& doc, const std::string& name, std::optional<std::size_t> horizon, bool literal) {
        auto g = doc.galois_spec(name);
        if (!g) throw SpecError("unknown galois " + name);
        GaloisSpec spec = *g;
        if (horizon) spec.horizon = *horizon;
        auto r = verify_galois(spec, {}, literal ? GaloisOrientation::Literal : GaloisOrientation::Standard);
        py::dict d;
        d["ok"] = r.ok;
        d["concrete_elements"] = r.concrete_elements;
        d["abstract_elements"] = r.abstract_elements;
        d["pairs_checked"] = r.pairs_checked;
        if (r.counterexample) {
          py::list cs, as;
          for (const auto& h : r.counterexample->concrete_set) cs.append(to_py(h));
          for (const auto& h : r.counterexample->abstract_set) as.append(to_py(h));
          d["counterexample"] = py::dict(py::arg("concrete_set") = cs, py::arg("abstract_set") = as,
                                         py::arg("f_subset") = r.counterexample->f_subset,
                                         py::arg("g_subset") = r.counterexample->g_subset);
        }
        return d;
      },
      py::arg("model"), py::arg("galois"), py::arg("horizon") = py::none(), py::arg("literal") = false);

  m.def(
      "check_causality",
      [](const ModelDocument& doc, const std::string& component, std::size_t horizon, std::uint64_t seed,
         std::optional<std::string> mode) {
        CausalityOptions opts;
        opts.horizon = horizon;
        opts.seed = seed;
        if (mode) {
          if (*mode == "strict") {
            opts.mode = Causality::Strict;
          } else if (*mode == "weak") {
            opts.mode = Causality::Weak;
          } else {
            throw SpecError("mode must be strict or weak");
          }
        }
        auto r = check_causality(need_component(doc, component), opts);
        py::dict d;
        d["ok"] = r.ok();
        d["mode"] = r.mode == Causality::Strict ? "strict" : "weak";
        d["exhaustive"] = r.exhaustive;
        d["histories"] = r.histories;
        if (r.counterexample) {
          d["counterexample"] = py::dict(py::arg("input1") = to_py(r.counterexample->input1),
                                         py::arg("input2") = to_py(r.counterexample->input2),
                                         py::arg("agree_ticks") = r.counterexample->agree_ticks,
                                         py::arg("diverge_tick") = r.counterexample->diverge_tick);
        }
        if (!r.error.empty()) d["error"] = r.error;
        return d;
      },
      py::arg("model"), py::arg("component"), py::arg("horizon") = 3, py::arg("seed") = 0,
      py::arg("mode") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
