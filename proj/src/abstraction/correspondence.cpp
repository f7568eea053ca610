#include "streamcheck/abstraction/correspondence.hpp"

#include "streamcheck/error.hpp"

namespace streamcheck {

std::string to_string(CorrespondenceResult::Status s) {
  switch (s) {
    case CorrespondenceResult::Status::Corresponding: return "corresponding";
    case CorrespondenceResult::Status::NotCorresponding: return "not corresponding";
    case CorrespondenceResult::Status::Error: return "error";
  }
  return "?";
}

namespace {

std::string false_ticks(const TimedStream& s) {
  std::string out;
  for (std::size_t t = 0; t < s.horizon(); ++t) {
    if (!s.messages()[t].as_bool()) out += (out.empty() ? "" : ",") + std::to_string(t + 1);
  }
  return out;
}

}  // namespace

CorrespondenceResult check_correspondence(const ComponentSpec& spec_a, const ComponentSpec& spec_c,
                                          const RelationSpec& ri, const RelationSpec& ro,
                                          const ChannelHistory& ta, const ChannelHistory& tc,
                                          const CorrespondenceOptions& options) {
  CorrespondenceResult r;
  if (ri.side != RelationSide::Input) {
    r.diagnostics.push_back("relation " + ri.name + " is not an input relation");
    return r;
  }
  if (ro.side != RelationSide::Output) {
    r.diagnostics.push_back("relation " + ro.name + " is not an output relation");
    return r;
  }
  try {
    RelationResult in = eval_relation(ri, ta, tc);
    r.ri_holds = in.holds;
    r.ri_per_tick = in.per_tick;
    std::size_t n = std::min(ta.horizon, tc.horizon);
    r.abstract_output = run(spec_a, ta, n, options.abstract_sim);
    r.concrete_output = run(spec_c, tc, n, options.concrete_sim);
    RelationResult out = eval_relation(ro, r.abstract_output, r.concrete_output);
    r.ro_holds = out.holds;
    r.ro_per_tick = out.per_tick;
  } catch (const Error& e) {
    r.status = CorrespondenceResult::Status::Error;
    r.diagnostics.push_back(e.what());
    return r;
  }
  r.corresponding = !r.ri_holds || r.ro_holds;
  r.status = r.corresponding ? CorrespondenceResult::Status::Corresponding
                             : CorrespondenceResult::Status::NotCorresponding;
  if (!r.ri_holds) {
    r.diagnostics.push_back("RI " + ri.name + " is false at ticks " + false_ticks(r.ri_per_tick) +
                            "; correspondence holds vacuously");
  }
  if (!r.ro_holds) {
    r.diagnostics.push_back("RO " + ro.name + " is false at ticks " + false_ticks(r.ro_per_tick));
  }
  return r;
}

namespace {

// Output pairs (abstract channel, concrete channel abstraction) related by gal.
std::vector<const ChannelAbstraction*> related_outputs(const GaloisSpec& gal,
                                                       const ComponentSpec& spec_a,
                                                       const ComponentSpec& spec_c) {
  std::vector<const ChannelAbstraction*> out;
  for (const auto& ch : gal.channels) {
    const Channel* a = spec_a.interface().find_output(ch.abstract);
    const Channel* c = spec_c.interface().find_output(ch.concrete);
    if (!a || !c) continue;
    if (!(a->type == ch.abstract_type) || !(c->type == ch.concrete_type)) {
      throw SpecError("galois " + gal.name + ": channel types of " + ch.concrete + "/" +
                      ch.abstract + " differ from the components' outputs");
    }
    out.push_back(&ch);
  }
  if (out.empty()) {
    throw SpecError("galois " + gal.name + " relates no outputs of " + spec_a.name() + " and " +
                    spec_c.name());
  }
  return out;
}

}  // namespace

RelationSpec derive_output_relation(const GaloisSpec& gal, const ComponentSpec& spec_a,
                                    const ComponentSpec& spec_c) {
  std::optional<Expr> all;
  for (const ChannelAbstraction* ch : related_outputs(gal, spec_a, spec_c)) {
    if (!ch->f) {
      throw UnsupportedError("galois " + gal.name + ": f of " + ch->concrete +
                             " is not element-wise");
    }
    Expr f_c = ch->f->substitute({{"c", Expr::ref("c." + ch->concrete)}});
    Expr eq = Expr::binary(Expr::Op::Eq, std::move(f_c), Expr::ref("a." + ch->abstract));
    all = all ? Expr::binary(Expr::Op::And, std::move(*all), std::move(eq)) : std::move(eq);
  }
  return make_relation(gal.name + "_ro", RelationSide::Output, spec_a, spec_c, std::move(*all));
}

RelationSpec output_checker_relation(const GaloisSpec& gal, const ComponentSpec& spec_a,
                                     const ComponentSpec& spec_c) {
  std::vector<std::string> names;
  CheckerRef ref;
  for (const ChannelAbstraction* ch : related_outputs(gal, spec_a, spec_c)) {
    names.push_back(ch->concrete);
    ref.wires.push_back({true, ch->abstract, "a_" + ch->abstract});
    ref.wires.push_back({false, ch->concrete, "c_" + ch->concrete});
  }
  auto checker = std::make_shared<const ComponentSpec>(build_output_checker(gal, names));
  ref.component = checker->name();
  ref.spec = checker;
  return make_relation(gal.name + "_ro_checker", RelationSide::Output, spec_a, spec_c,
                       std::move(ref));
}

}  // namespace streamcheck
