#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <type_traits>

#include "streamcheck/format/document.hpp"
#include "streamcheck/format/lexer.hpp"
#include "streamcheck/format/suggest.hpp"
#include "streamcheck/model/compose_check.hpp"

namespace streamcheck {

namespace {

struct SyntaxError {
  SourceLoc loc;
  std::string message;
};

constexpr std::size_t kMaxDepth = 200;

const std::set<std::string, std::less<>> kReserved = {
    "true", "false", "if", "then", "else", "min", "max", "abs", "floor", "bool", "int", "real"};

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, ParseResult& out) : t_(std::move(tokens)), r_(out) {}

  void parse_document() {
    while (peek().kind != Token::Kind::End) {
      const Token& kw = peek();
      if (kw.is("enum")) {
        parse_enum();
      } else if (kw.is("component")) {
        parse_automaton();
      } else if (kw.is("composite")) {
        parse_composite();
      } else if (kw.is("relation")) {
        parse_relation();
      } else if (kw.is("galois")) {
        parse_galois();
      } else if (kw.is("concretizer")) {
        parse_concretizer();
      } else if (kw.is("refinement")) {
        parse_refinement();
      } else {
        fail(kw, "expected a declaration, found " + describe(kw));
      }
    }
  }

 private:
  // ---- token helpers

  const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }

  const Token& next() {
    const Token& t = peek();
    if (pos_ < t_.size() - 1) ++pos_;
    return t;
  }

  bool accept(std::string_view sym) {
    if (!peek().is(sym)) return false;
    next();
    return true;
  }

  const Token& expect(std::string_view sym) {
    if (!peek().is(sym)) fail(peek(), "expected '" + std::string(sym) + "', found " + describe(peek()));
    return next();
  }

  [[noreturn]] void fail(const Token& at, std::string msg) { throw SyntaxError{at.loc, std::move(msg)}; }

  void report(SourceLoc loc, std::string msg) { r_.diagnostics.push_back({loc, std::move(msg), {}}); }

  template <typename Defs>
  void report_unknown(const Token& t, const std::string& what, const Defs& defs) {
    std::vector<std::string> known;
    for (const auto& d : defs) {
      if constexpr (std::is_same_v<std::decay_t<decltype(*d)>, ComponentSpec>) {
        known.push_back(d->name());
      } else {
        known.push_back(d->name);
      }
    }
    std::string msg = "unknown " + what + " " + t.text;
    std::string s = closest_match(t.text, known);
    if (!s.empty()) msg += "; did you mean " + s + "?";
    report(t.loc, msg);
  }

  // Plain (undotted, unreserved) identifier.
  const Token& name(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || t.text.find('.') != std::string::npos) {
      fail(t, std::string("expected ") + what + ", found " + describe(t));
    }
    if (kReserved.count(t.text)) fail(t, "'" + t.text + "' is a reserved word");
    return next();
  }

  const Token& dotted(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident) fail(t, std::string("expected ") + what + ", found " + describe(t));
    return next();
  }

  void declare(const Token& n) {
    if (!names_.insert(n.text).second) report(n.loc, "duplicate name " + n.text);
  }

  // ---- types and values

  std::int64_t signed_int() {
    bool neg = accept("-");
    const Token& t = peek();
    if (t.kind != Token::Kind::Int) fail(t, "expected an integer, found " + describe(t));
    next();
    std::string text = (neg ? "-" : "") + t.text;
    std::int64_t v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
      fail(t, "integer literal " + text + " out of range");
    }
    return v;
  }

  DataType type() {
    const Token& t = peek();
    if (t.is("bool")) {
      next();
      return DataType::boolean();
    }
    if (t.is("real")) {
      next();
      return DataType::real();
    }
    if (t.is("int")) {
      next();
      if (!accept("[")) return DataType::integer();
      std::int64_t lo = signed_int();
      expect(",");
      std::int64_t hi = signed_int();
      expect("]");
      if (lo > hi) fail(t, "empty integer range [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
      return DataType::integer(lo, hi);
    }
    if (t.kind == Token::Kind::Ident) {
      auto it = enums_.find(t.text);
      if (it == enums_.end()) fail(t, "unknown type " + t.text);
      next();
      return DataType::enumeration(it->second);
    }
    fail(t, "expected a type, found " + describe(t));
  }

  // A literal in the text form of `ty`. Ill-typed values are reported and
  // replaced by the type's default so parsing can continue.
  Message value(const DataType& ty) {
    const Token& start = peek();
    std::string text;
    if (accept("-")) text = "-";
    const Token& t = peek();
    if (t.kind != Token::Kind::Int && t.kind != Token::Kind::Real &&
        (t.kind != Token::Kind::Ident || !text.empty())) {
      fail(t, "expected a value, found " + describe(t));
    }
    next();
    text += t.text;
    if (auto m = parse_message(ty, text)) return *m;
    std::string msg = "invalid value " + text + " for type " + ty.to_string();
    if (ty.is_enum()) {
      std::string s = closest_match(text, ty.enum_def()->labels);
      if (!s.empty()) msg += "; did you mean " + s + "?";
    }
    report(start.loc, msg);
    return default_message(ty);
  }

  // ---- expressions

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser, const Token& at) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail(at, "expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  Expr expr() {
    DepthGuard g(*this, peek());
    if (peek().is("if")) {
      SourceLoc loc = next().loc;
      Expr c = expr();
      expect("then");
      Expr a = expr();
      expect("else");
      Expr b = expr();
      return Expr::ite(std::move(c), std::move(a), std::move(b), loc);
    }
    return binary_level(0);
  }

  Expr binary_level(int level) {
    static const std::vector<std::vector<std::pair<std::string_view, Expr::Op>>> kLevels = {
        {{"||", Expr::Op::Or}},
        {{"&&", Expr::Op::And}},
        {{"==", Expr::Op::Eq}, {"!=", Expr::Op::Ne}},
        {{"<=", Expr::Op::Le}, {">=", Expr::Op::Ge}, {"<", Expr::Op::Lt}, {">", Expr::Op::Gt}},
        {{"+", Expr::Op::Add}, {"-", Expr::Op::Sub}},
        {{"*", Expr::Op::Mul}, {"/", Expr::Op::Div}},
    };
    if (level == static_cast<int>(kLevels.size())) return unary();
    Expr lhs = binary_level(level + 1);
    for (;;) {
      const Token& t = peek();
      if (t.kind != Token::Kind::Symbol) return lhs;
      auto it = std::find_if(kLevels[level].begin(), kLevels[level].end(),
                             [&](const auto& p) { return p.first == t.text; });
      if (it == kLevels[level].end()) return lhs;
      next();
      Expr rhs = binary_level(level + 1);
      lhs = Expr::binary(it->second, std::move(lhs), std::move(rhs), t.loc);
    }
  }

  Expr unary() {
    DepthGuard g(*this, peek());
    const Token& t = peek();
    if (t.is("!")) {
      next();
      return Expr::unary(Expr::Op::Not, unary(), t.loc);
    }
    if (t.is("-")) {
      next();
      const Token& n = peek();
      if (n.kind == Token::Kind::Int || n.kind == Token::Kind::Real) return number(n, true, t.loc);
      return Expr::unary(Expr::Op::Neg, unary(), t.loc);
    }
    return primary();
  }

  Expr number(const Token& n, bool negative, SourceLoc loc) {
    next();
    std::string text = (negative ? "-" : "") + n.text;
    const char* first = text.data();
    const char* last = first + text.size();
    if (n.kind == Token::Kind::Int) {
      std::int64_t v = 0;
      auto res = std::from_chars(first, last, v);
      if (res.ec != std::errc() || res.ptr != last) fail(n, "integer literal " + text + " out of range");
      return Expr::literal(v, loc);
    }
    double v = 0;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) fail(n, "real literal " + text + " out of range");
    return Expr::literal(v, loc);
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int || t.kind == Token::Kind::Real) return number(t, false, t.loc);
    if (t.is("(")) {
      next();
      Expr e = expr();
      expect(")");
      return e;
    }
    if (t.kind != Token::Kind::Ident) fail(t, "expected an expression, found " + describe(t));
    if (t.text == "true" || t.text == "false") {
      next();
      return Expr::literal(t.text == "true", t.loc);
    }
    if (t.text == "min" || t.text == "max") {
      next();
      expect("(");
      Expr a = expr();
      expect(",");
      Expr b = expr();
      expect(")");
      return Expr::binary(t.text == "min" ? Expr::Op::Min : Expr::Op::Max, std::move(a), std::move(b), t.loc);
    }
    if (t.text == "abs" || t.text == "floor") {
      next();
      expect("(");
      Expr a = expr();
      expect(")");
      return Expr::unary(t.text == "abs" ? Expr::Op::Abs : Expr::Op::Floor, std::move(a), t.loc);
    }
    if (kReserved.count(t.text)) fail(t, "unexpected " + describe(t));
    next();
    return Expr::ref(t.text, t.loc);
  }

  // Replaces references that are not local names by enum labels; reports
  // the rest as unresolved. Returns false if anything stayed unresolved.
  template <typename IsLocal>
  bool resolve(Expr& e, const IsLocal& is_local) {
    bool ok = true;
    std::map<std::string, Expr> subst;
    walk_refs(e, [&](const Expr& ref) {
      const std::string& n = ref.name();
      if (is_local(n) || subst.count(n)) return;
      auto it = labels_.find(n);
      if (it != labels_.end()) {
        subst.emplace(n, Expr::literal(it->second, ref.loc()));
      } else {
        report(ref.loc(), "unresolved channel " + n);
        ok = false;
      }
    });
    if (!subst.empty()) e = e.substitute(subst);
    return ok;
  }

  template <typename F>
  static void walk_refs(const Expr& e, const F& f) {
    if (e.op() == Expr::Op::Ref) f(e);
    for (const auto& a : e.args()) walk_refs(a, f);
  }

  // ---- declarations

  void parse_enum() {
    next();
    const Token& n = name("an enum name");
    declare(n);
    expect("{");
    auto def = std::make_shared<EnumDef>();
    def->name = n.text;
    if (!peek().is("}")) {
      do {
        const Token& l = name("a label");
        if (std::find(def->labels.begin(), def->labels.end(), l.text) != def->labels.end() ||
            labels_.count(l.text)) {
          report(l.loc, "duplicate enum label " + l.text);
        } else {
          def->labels.push_back(l.text);
        }
      } while (accept(","));
    }
    expect("}");
    if (def->labels.empty()) {
      report(n.loc, "enum " + n.text + " has no labels");
      return;
    }
    std::shared_ptr<const EnumDef> cdef = def;
    enums_[n.text] = cdef;
    for (std::size_t i = 0; i < cdef->labels.size(); ++i) labels_.emplace(cdef->labels[i], EnumLabel{cdef, i});
    r_.document.enums.push_back(cdef);
  }

  Channel channel_decl() {
    const Token& n = name("a channel name");
    expect(":");
    return {n.text, type()};
  }

  void parse_automaton() {
    next();
    const Token& n = name("a component name");
    SourceLoc where = n.loc;
    declare(n);
    AutomatonSpec a;
    a.name = n.text;
    std::vector<SourceLoc> transition_locs;
    expect("{");
    while (!accept("}")) {
      const Token& kw = peek();
      if (accept("causality")) {
        const Token& m = peek();
        if (accept("strict")) {
          a.causality = Causality::Strict;
        } else if (accept("weak")) {
          a.causality = Causality::Weak;
        } else {
          fail(m, "expected strict or weak, found " + describe(m));
        }
        expect(";");
      } else if (accept("total")) {
        a.total = true;
        expect(";");
      } else if (accept("input")) {
        a.interface.inputs.push_back(channel_decl());
        expect(";");
      } else if (accept("output")) {
        Channel c = channel_decl();
        if (accept("=")) a.output_init.insert_or_assign(c.name, value(c.type));
        a.interface.outputs.push_back(std::move(c));
        expect(";");
      } else if (accept("var")) {
        Channel c = channel_decl();
        expect("=");
        Message init = value(c.type);
        a.variables.push_back({c.name, c.type, std::move(init)});
        expect(";");
      } else if (accept("param")) {
        Channel c = channel_decl();
        std::optional<Message> def;
        if (accept("=")) def = value(c.type);
        a.params.push_back({c.name, c.type, std::move(def)});
        expect(";");
      } else if (accept("states")) {
        do {
          a.states.push_back(name("a state name").text);
        } while (accept(","));
        expect(";");
      } else if (accept("initial")) {
        const Token& s = name("a state name");
        if (!a.initial_state.empty()) report(s.loc, "initial state declared twice");
        a.initial_state = s.text;
        expect(";");
      } else if (accept("transitions")) {
        expect("{");
        while (!accept("}")) {
          transition_locs.push_back(peek().loc);
          a.transitions.push_back(transition());
        }
      } else {
        fail(kw, "expected a component item, found " + describe(kw));
      }
    }

    std::set<std::string> local;
    for (const auto& c : a.interface.inputs) local.insert(c.name);
    for (const auto& c : a.interface.outputs) local.insert(c.name);
    for (const auto& v : a.variables) local.insert(v.name);
    for (const auto& p : a.params) local.insert(p.name);
    auto is_local = [&](const std::string& x) { return local.count(x) != 0; };
    bool resolved = true;
    for (const auto& x : local) {
      if (labels_.count(x)) {
        report(where, a.name + ": name " + x + " clashes with an enum label");
        resolved = false;
      }
    }
    for (auto& t : a.transitions) {
      resolved = resolve(t.guard, is_local) && resolved;
      for (auto& as : t.assignments) resolved = resolve(as.value, is_local) && resolved;
    }
    for (const auto& issue : check_automaton(a)) {
      // unresolved names were reported above already
      if (!resolved && issue.message.find("unresolved name ") != std::string::npos) continue;
      report(issue.loc.line ? issue.loc : where, issue.message);
    }
    r_.document.components.push_back(std::make_shared<const ComponentSpec>(std::move(a)));
  }

  Transition transition() {
    Transition t;
    if (peek().kind == Token::Kind::Ident && peek(1).is(":")) {
      t.name = name("a transition name").text;
      next();
    }
    t.source = name("a state name").text;
    expect("->");
    t.target = name("a state name").text;
    if (accept("when")) t.guard = expr();
    if (accept("do")) {
      do {
        const Token& target = name("an assignment target");
        expect(":=");
        t.assignments.push_back({target.text, expr()});
      } while (accept(","));
    }
    expect(";");
    return t;
  }

  void parse_composite() {
    next();
    const Token& n = name("a composite name");
    declare(n);
    CompositeSpec c;
    c.name = n.text;
    bool resolved = true;
    expect("{");
    while (!accept("}")) {
      const Token& kw = peek();
      if (accept("input")) {
        c.interface.inputs.push_back(channel_decl());
      } else if (accept("output")) {
        c.interface.outputs.push_back(channel_decl());
      } else if (accept("sub")) {
        const Token& inst = name("an instance name");
        expect(":");
        const Token& ty = name("a component name");
        auto spec = r_.document.component(ty.text);
        if (!spec) {
          if (ty.text == c.name) {
            report(ty.loc, "recursive composite " + ty.text);
          } else {
            report_unknown(ty, "component", r_.document.components);
          }
          resolved = false;
        }
        c.subcomponents.push_back({inst.text, ty.text, spec});
      } else if (accept("connect")) {
        Endpoint from = endpoint();
        expect("->");
        Endpoint to = endpoint();
        c.connectors.push_back({std::move(from), std::move(to)});
      } else {
        fail(kw, "expected a composite item, found " + describe(kw));
      }
      expect(";");
    }
    if (resolved) {
      for (const auto& v : compose_check(c)) report(n.loc, v.message);
    }
    r_.document.components.push_back(std::make_shared<const ComponentSpec>(std::move(c)));
  }

  Endpoint endpoint() {
    const std::string& text = dotted("a channel or instance.port").text;
    auto dot = text.find('.');
    if (dot == std::string::npos) return {"", text};
    return {text.substr(0, dot), text.substr(dot + 1)};
  }

  std::shared_ptr<const ComponentSpec> component_ref() {
    const Token& t = name("a component name");
    auto spec = r_.document.component(t.text);
    if (!spec) report_unknown(t, "component", r_.document.components);
    return spec;
  }

  void parse_relation() {
    next();
    const Token& n = name("a relation name");
    declare(n);
    RelationSide side = RelationSide::Input;
    if (accept("output")) {
      side = RelationSide::Output;
    } else if (!accept("input")) {
      fail(peek(), "expected input or output, found " + describe(peek()));
    }
    const Token& abs_tok = peek();
    auto abs = component_ref();
    expect("->");
    const Token& conc_tok = peek();
    auto conc = component_ref();
    expect("{");
    std::variant<Expr, CheckerRef> form;
    const Token& kw = peek();
    if (accept("holds")) {
      form = expr();
      expect(";");
    } else if (accept("checker")) {
      CheckerRef ref;
      const Token& ck = name("a checker component");
      ref.component = ck.text;
      ref.spec = r_.document.component(ck.text);
      if (!ref.spec) report_unknown(ck, "component", r_.document.components);
      expect("{");
      while (!accept("}")) {
        const Token& src = dotted("a.<channel> or c.<channel>");
        bool is_a = src.text.rfind("a.", 0) == 0;
        if (!is_a && src.text.rfind("c.", 0) != 0) fail(src, "expected a.<channel> or c.<channel>");
        expect("->");
        ref.wires.push_back({is_a, src.text.substr(2), name("a checker input").text});
        expect(";");
      }
      form = std::move(ref);
    } else {
      fail(kw, "expected holds or checker, found " + describe(kw));
    }
    expect("}");

    RelationSpec rel;
    if (abs && conc) {
      rel = make_relation(n.text, side, *abs, *conc, std::move(form));
    } else {
      rel.name = n.text;
      rel.side = side;
      rel.abstract_component = abs_tok.text;
      rel.concrete_component = conc_tok.text;
      rel.form = std::move(form);
    }
    bool ok = abs && conc;
    if (ok && rel.is_predicate()) {
      auto has = [](const std::vector<Channel>& cs, const std::string& x) {
        return std::any_of(cs.begin(), cs.end(), [&](const Channel& c) { return c.name == x; });
      };
      auto is_local = [&](const std::string& x) {
        if (x.rfind("a.", 0) == 0) return has(rel.abstract_channels, x.substr(2));
        if (x.rfind("c.", 0) == 0) return has(rel.concrete_channels, x.substr(2));
        return false;
      };
      ok = resolve(std::get<Expr>(rel.form), is_local);
    }
    if (ok && (!rel.is_predicate() && !rel.checker().spec)) ok = false;
    if (ok) {
      for (const auto& issue : check_relation(rel)) report(issue.loc.line ? issue.loc : n.loc, issue.message);
    }
    r_.document.relations.push_back(std::make_shared<const RelationSpec>(std::move(rel)));
  }

  std::vector<Message> value_list(const DataType& ty) {
    std::vector<Message> out;
    do {
      out.push_back(value(ty));
    } while (accept(","));
    return out;
  }

  void parse_galois() {
    next();
    const Token& n = name("a galois name");
    declare(n);
    GaloisSpec g;
    g.name = n.text;
    bool ok = true;
    expect("{");
    while (!accept("}")) {
      const Token& kw = peek();
      if (accept("horizon")) {
        std::int64_t h = signed_int();
        if (h < 0) fail(kw, "horizon must not be negative");
        g.horizon = static_cast<std::size_t>(h);
        expect(";");
      } else if (accept("f")) {
        expect("component");
        const Token& c = name("a component name");
        g.f_component = c.text;
        g.f_spec = r_.document.component(c.text);
        if (!g.f_spec) {
          report_unknown(c, "component", r_.document.components);
          ok = false;
        }
        expect(";");
      } else if (accept("map")) {
        ChannelAbstraction ch;
        Channel conc = channel_decl();
        expect("->");
        Channel abst = channel_decl();
        ch.concrete = conc.name;
        ch.concrete_type = conc.type;
        ch.abstract = abst.name;
        ch.abstract_type = abst.type;
        bool has_g = false;
        expect("{");
        while (!accept("}")) {
          const Token& item = peek();
          if (accept("f")) {
            Expr f = expr();
            ok = resolve(f, [](const std::string& x) { return x == "c"; }) && ok;
            ch.f = std::move(f);
          } else if (accept("g")) {
            ch.g = expr();
            ok = resolve(ch.g, [](const std::string& x) { return x == "a" || x == "c"; }) && ok;
            has_g = true;
          } else if (accept("universe")) {
            ch.concrete_universe = value_list(ch.concrete_type);
          } else if (accept("abstract")) {
            expect("universe");
            ch.abstract_universe = value_list(ch.abstract_type);
          } else {
            fail(item, "expected f, g, universe or abstract universe, found " + describe(item));
          }
          expect(";");
        }
        if (!has_g) {
          report(kw.loc, "map " + ch.concrete + " has no g");
          ok = false;
        }
        g.channels.push_back(std::move(ch));
      } else {
        fail(kw, "expected horizon, f component or map, found " + describe(kw));
      }
    }
    if (ok) {
      for (const auto& issue : check_galois(g)) report(issue.loc.line ? issue.loc : n.loc, issue.message);
    }
    r_.document.galois.push_back(std::make_shared<const GaloisSpec>(std::move(g)));
  }

  void parse_concretizer() {
    next();
    const Token& n = name("a concretizer name");
    declare(n);
    ConcretizerSpec c;
    c.name = n.text;
    expect("of");
    const Token& comp = name("a component name");
    c.component_name = comp.text;
    c.component = r_.document.component(comp.text);
    if (!c.component) report_unknown(comp, "component", r_.document.components);
    expect("{");
    while (!accept("}")) {
      const Token& kw = peek();
      ConcretizerParam p;
      if (accept("const")) {
        p.kind = ConcretizerParam::Kind::Constant;
      } else if (accept("stream")) {
        p.kind = ConcretizerParam::Kind::Stream;
      } else {
        fail(kw, "expected const or stream, found " + describe(kw));
      }
      Channel decl = channel_decl();
      p.name = decl.name;
      p.type = decl.type;
      if (accept("in")) {
        expect("[");
        Message lo = value(p.type);
        expect(",");
        Message hi = value(p.type);
        expect("]");
        p.range.emplace(std::move(lo), std::move(hi));
      }
      expect(";");
      c.params.push_back(std::move(p));
    }
    if (c.component) {
      for (const auto& issue : check_concretizer(c)) report(n.loc, issue.message);
    }
    r_.document.concretizers.push_back(std::make_shared<const ConcretizerSpec>(std::move(c)));
  }

  void parse_refinement() {
    next();
    const Token& n = name("a refinement name");
    declare(n);
    RefinementSpec ref;
    ref.name = n.text;
    expect("{");
    while (!accept("}")) {
      const Token& kw = peek();
      if (accept("abstract")) {
        const Token& t = name("a component name");
        ref.abstract_name = t.text;
        ref.abstract = r_.document.component(t.text);
        if (!ref.abstract) report_unknown(t, "component", r_.document.components);
      } else if (accept("concrete")) {
        const Token& t = name("a component name");
        ref.concrete_name = t.text;
        ref.concrete = r_.document.component(t.text);
        if (!ref.concrete) report_unknown(t, "component", r_.document.components);
      } else if (accept("ri") || accept("ro")) {
        const Token& t = name("a relation name");
        auto rel = r_.document.relation(t.text);
        if (!rel) report_unknown(t, "relation", r_.document.relations);
        (kw.is("ri") ? ref.ri_name : ref.ro_name) = t.text;
        (kw.is("ri") ? ref.ri : ref.ro) = rel;
      } else if (accept("concretizer")) {
        const Token& t = name("a concretizer name");
        ref.concretizer_name = t.text;
        ref.concretizer = r_.document.concretizer(t.text);
        if (!ref.concretizer) report_unknown(t, "concretizer", r_.document.concretizers);
      } else if (accept("galois")) {
        const Token& t = name("a galois name");
        ref.galois_name = t.text;
        ref.galois = r_.document.galois_spec(t.text);
        if (!ref.galois) report_unknown(t, "galois", r_.document.galois);
      } else {
        fail(kw, "expected abstract, concrete, ri, ro, concretizer or galois, found " + describe(kw));
      }
      expect(";");
    }
    check_refinement(ref, n.loc);
    r_.document.refinements.push_back(std::make_shared<const RefinementSpec>(std::move(ref)));
  }

  void check_refinement(const RefinementSpec& ref, SourceLoc loc) {
    auto issue = [&](std::string m) { report(loc, "refinement " + ref.name + ": " + std::move(m)); };
    if (ref.abstract_name.empty()) issue("no abstract component");
    if (ref.concrete_name.empty()) issue("no concrete component");
    if (ref.ri_name.empty()) issue("no ri relation");
    if (ref.ro_name.empty()) issue("no ro relation");
    auto check_rel = [&](const std::shared_ptr<const RelationSpec>& rel, RelationSide side) {
      if (!rel) return;
      if (rel->side != side) issue("relation " + rel->name + " is not an " + to_string(side) + " relation");
      if (rel->abstract_component != ref.abstract_name || rel->concrete_component != ref.concrete_name) {
        issue("relation " + rel->name + " relates " + rel->abstract_component + " and " +
              rel->concrete_component);
      }
    };
    check_rel(ref.ri, RelationSide::Input);
    check_rel(ref.ro, RelationSide::Output);
    if (ref.concretizer && ref.concretizer->component && ref.abstract && ref.concrete) {
      const auto& k = *ref.concretizer;
      auto ins = abstract_inputs(k);
      for (const auto& want : ref.abstract->interface().inputs) {
        if (std::find(ins.begin(), ins.end(), want) == ins.end()) {
          issue("concretizer " + k.name + " does not consume abstract input " + want.name);
        }
      }
      const auto& outs = k.component->interface().outputs;
      for (const auto& want : ref.concrete->interface().inputs) {
        if (std::find(outs.begin(), outs.end(), want) == outs.end()) {
          issue("concretizer " + k.name + " does not produce concrete input " + want.name);
        }
      }
    }
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  ParseResult& r_;
  std::map<std::string, std::shared_ptr<const EnumDef>> enums_;
  std::map<std::string, EnumLabel> labels_;
  std::set<std::string> names_;
};

}  // namespace

ParseResult parse_model(std::string_view text) {
  ParseResult r;
  std::vector<Token> tokens = tokenize(text, r.diagnostics);
  if (!r.diagnostics.empty()) return r;
  Parser p(std::move(tokens), r);
  try {
    p.parse_document();
  } catch (const SyntaxError& e) {
    r.diagnostics.push_back({e.loc, e.message, {}});
  } catch (const std::exception& e) {
    r.diagnostics.push_back({{}, e.what(), {}});
  }
  return r;
}

}  // namespace streamcheck
