#pragma once

// Generator of random, well-formed model files for round-trip testing.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "streamcheck/core/message.hpp"

namespace sctest {

class RandomModel {
 public:
  explicit RandomModel(std::uint64_t seed) : rng_(seed) {}

  std::string generate() {
    out_.clear();
    enums_.clear();
    comps_.clear();
    int n_enums = pick(0, 2);
    for (int e = 0; e < n_enums; ++e) gen_enum(e);
    int n_comps = pick(1, 3);
    for (int c = 0; c < n_comps; ++c) gen_component(c);
    if (chance(0.5)) gen_composite();
    if (comps_.size() >= 2 && chance(0.7)) gen_relation();
    if (chance(0.6)) gen_galois();
    return out_;
  }

 private:
  enum class K { Bool, Int, Real, Enum };
  struct Ty {
    K k = K::Bool;
    std::int64_t lo = 0, hi = 0;
    bool bounded = false;
    int en = 0;
  };
  struct Var {
    std::string name;
    Ty ty;
  };
  struct Comp {
    std::string name;
    bool weak = false;
    std::vector<Var> inputs, outputs;
  };

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::string ty_text(const Ty& t) const {
    switch (t.k) {
      case K::Bool: return "bool";
      case K::Int:
        return t.bounded ? "int[" + std::to_string(t.lo) + "," + std::to_string(t.hi) + "]" : "int";
      case K::Real: return "real";
      case K::Enum: return "E" + std::to_string(t.en);
    }
    return "";
  }

  Ty random_type() {
    Ty t;
    int r = pick(0, enums_.empty() ? 2 : 3);
    if (r == 0) {
      t.k = K::Bool;
    } else if (r == 1) {
      t.k = K::Int;
      t.bounded = chance(0.6);
      if (t.bounded) {
        t.lo = pick(-50, 10);
        t.hi = t.lo + pick(0, 100);
      }
    } else if (r == 2) {
      t.k = K::Real;
    } else {
      t.k = K::Enum;
      t.en = pick(0, static_cast<int>(enums_.size()) - 1);
    }
    return t;
  }

  std::string label(int en) {
    return "L" + std::to_string(en) + "_" + std::to_string(pick(0, enums_[en] - 1));
  }

  std::string int_lit(std::int64_t lo, std::int64_t hi) {
    return std::to_string(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_));
  }

  std::string real_lit() {
    double v = std::uniform_real_distribution<double>(-1000.0, 1000.0)(rng_);
    if (chance(0.3)) v = static_cast<double>(pick(-20, 20)) / 4.0;
    return streamcheck::format_real(v);
  }

  std::string value_of(const Ty& t) {
    switch (t.k) {
      case K::Bool: return chance(0.5) ? "true" : "false";
      case K::Int: return t.bounded ? int_lit(t.lo, t.hi) : int_lit(-1000, 1000);
      case K::Real: return real_lit();
      case K::Enum: return label(t.en);
    }
    return "";
  }

  std::string ref_of(const std::vector<Var>& scope, K k, int en = -1) {
    std::vector<const Var*> hits;
    for (const auto& v : scope) {
      if (v.ty.k == k && (k != K::Enum || v.ty.en == en)) hits.push_back(&v);
    }
    if (hits.empty()) return {};
    return hits[static_cast<std::size_t>(pick(0, static_cast<int>(hits.size()) - 1))]->name;
  }

  std::string expr(const std::vector<Var>& scope, const Ty& t, int depth) {
    bool leaf = depth <= 0 || chance(0.3);
    if (leaf) {
      if (chance(0.6)) {
        std::string r = ref_of(scope, t.k, t.en);
        if (!r.empty()) return r;
      }
      if (t.k == K::Int) return int_lit(-100, 100);
      return value_of(t);
    }
    switch (t.k) {
      case K::Bool: {
        Ty num;
        num.k = chance(0.5) ? K::Int : K::Real;
        switch (pick(0, 5)) {
          case 0: return "!" + paren(expr(scope, t, depth - 1));
          case 1: return paren(expr(scope, t, depth - 1) + " && " + expr(scope, t, depth - 1));
          case 2: return paren(expr(scope, t, depth - 1) + " || " + expr(scope, t, depth - 1));
          case 3: {
            static const char* ops[] = {" < ", " <= ", " > ", " >= ", " == ", " != "};
            return paren(expr(scope, num, depth - 1) + ops[pick(0, 5)] + expr(scope, num, depth - 1));
          }
          case 4:
            if (!enums_.empty()) {
              Ty e;
              e.k = K::Enum;
              e.en = pick(0, static_cast<int>(enums_.size()) - 1);
              return paren(expr(scope, e, depth - 1) + (chance(0.5) ? " == " : " != ") +
                           expr(scope, e, depth - 1));
            }
            [[fallthrough]];
          default: return ite(scope, t, depth);
        }
      }
      case K::Int: {
        Ty r;
        r.k = K::Real;
        switch (pick(0, 7)) {
          case 0: return paren(expr(scope, t, depth - 1) + " + " + expr(scope, t, depth - 1));
          case 1: return paren(expr(scope, t, depth - 1) + " - " + expr(scope, t, depth - 1));
          case 2: return paren(expr(scope, t, depth - 1) + " * " + expr(scope, t, depth - 1));
          case 3: return "min(" + expr(scope, t, depth - 1) + ", " + expr(scope, t, depth - 1) + ")";
          case 4: return "max(" + expr(scope, t, depth - 1) + ", " + expr(scope, t, depth - 1) + ")";
          case 5: return "abs(" + expr(scope, t, depth - 1) + ")";
          case 6: return "floor(" + expr(scope, r, depth - 1) + ")";
          default: return ite(scope, t, depth);
        }
      }
      case K::Real: {
        switch (pick(0, 4)) {
          case 0: return paren(expr(scope, t, depth - 1) + " + " + expr(scope, t, depth - 1));
          case 1: return paren(expr(scope, t, depth - 1) + " / " + expr(scope, t, depth - 1));
          case 2: return "-" + paren(expr(scope, t, depth - 1));
          case 3: return "max(" + expr(scope, t, depth - 1) + ", " + expr(scope, t, depth - 1) + ")";
          default: return ite(scope, t, depth);
        }
      }
      case K::Enum: return ite(scope, t, depth);
    }
    return "";
  }

  std::string ite(const std::vector<Var>& scope, const Ty& t, int depth) {
    Ty b;
    return paren("if " + expr(scope, b, depth - 1) + " then " + expr(scope, t, depth - 1) + " else " +
                 expr(scope, t, depth - 1));
  }

  static std::string paren(const std::string& s) { return "(" + s + ")"; }

  // Assignments to bounded ints stay in range by construction.
  std::string assigned_value(const std::vector<Var>& scope, const Ty& t) {
    if (t.k == K::Int && t.bounded) return int_lit(t.lo, t.hi);
    return expr(scope, t, 2);
  }

  void gen_enum(int e) {
    int n = pick(1, 4);
    enums_.push_back(n);
    out_ += "enum E" + std::to_string(e) + " { ";
    for (int i = 0; i < n; ++i) out_ += (i ? ", L" : "L") + std::to_string(e) + "_" + std::to_string(i);
    out_ += " }\n\n";
  }

  void gen_component(int c) {
    Comp comp;
    comp.name = "C" + std::to_string(c);
    comp.weak = chance(0.3);
    std::string pre = "c" + std::to_string(c) + "_";
    int ni = pick(1, 3), no = pick(1, 2), nv = pick(0, 2), np = pick(0, 1), ns = pick(1, 3);
    for (int i = 0; i < ni; ++i) comp.inputs.push_back({pre + "in" + std::to_string(i), random_type()});
    for (int i = 0; i < no; ++i) comp.outputs.push_back({pre + "out" + std::to_string(i), random_type()});
    std::vector<Var> vars, params;
    for (int i = 0; i < nv; ++i) vars.push_back({pre + "v" + std::to_string(i), random_type()});
    for (int i = 0; i < np; ++i) params.push_back({pre + "p" + std::to_string(i), random_type()});

    out_ += "component " + comp.name + " {\n";
    if (comp.weak) out_ += "  causality weak;\n";
    if (chance(0.2)) out_ += "  total;\n";
    for (const auto& v : comp.inputs) out_ += "  input " + v.name + ": " + ty_text(v.ty) + ";\n";
    for (const auto& v : comp.outputs) {
      out_ += "  output " + v.name + ": " + ty_text(v.ty);
      if (!comp.weak || chance(0.3)) out_ += " = " + value_of(v.ty);
      out_ += ";\n";
    }
    for (const auto& v : vars) out_ += "  var " + v.name + ": " + ty_text(v.ty) + " = " + value_of(v.ty) + ";\n";
    for (const auto& v : params) {
      out_ += "  param " + v.name + ": " + ty_text(v.ty);
      if (chance(0.5)) out_ += " = " + value_of(v.ty);
      out_ += ";\n";
    }
    std::vector<std::string> states;
    for (int i = 0; i < ns; ++i) states.push_back(pre + "S" + std::to_string(i));
    out_ += "  states ";
    for (int i = 0; i < ns; ++i) out_ += (i ? ", " : "") + states[static_cast<std::size_t>(i)];
    out_ += ";\n  initial " + states[static_cast<std::size_t>(pick(0, ns - 1))] + ";\n";

    std::vector<Var> readable = comp.inputs;
    readable.insert(readable.end(), vars.begin(), vars.end());
    readable.insert(readable.end(), params.begin(), params.end());
    std::vector<Var> writable = comp.outputs;
    writable.insert(writable.end(), vars.begin(), vars.end());

    int nt = pick(0, 4);
    if (nt > 0) {
      out_ += "  transitions {\n";
      for (int i = 0; i < nt; ++i) {
        out_ += "    ";
        if (chance(0.5)) out_ += pre + "t" + std::to_string(i) + ": ";
        out_ += states[static_cast<std::size_t>(pick(0, ns - 1))] + " -> " +
                states[static_cast<std::size_t>(pick(0, ns - 1))];
        if (chance(0.7)) out_ += " when " + expr(readable, Ty{}, 3);
        std::vector<const Var*> targets;
        for (const auto& w : writable) {
          if (chance(0.5)) targets.push_back(&w);
        }
        for (std::size_t k = 0; k < targets.size(); ++k) {
          out_ += (k ? ", " : " do ") + targets[k]->name + " := " + assigned_value(readable, targets[k]->ty);
        }
        out_ += ";\n";
      }
      out_ += "  }\n";
    }
    out_ += "}\n\n";
    comps_.push_back(comp);
  }

  void gen_composite() {
    const Comp& inner = comps_[static_cast<std::size_t>(pick(0, static_cast<int>(comps_.size()) - 1))];
    out_ += "composite Wrap {\n";
    for (const auto& v : inner.inputs) out_ += "  input w_" + v.name + ": " + ty_text(v.ty) + ";\n";
    for (const auto& v : inner.outputs) out_ += "  output w_" + v.name + ": " + ty_text(v.ty) + ";\n";
    out_ += "  sub inner: " + inner.name + ";\n";
    for (const auto& v : inner.inputs) out_ += "  connect w_" + v.name + " -> inner." + v.name + ";\n";
    for (const auto& v : inner.outputs) out_ += "  connect inner." + v.name + " -> w_" + v.name + ";\n";
    out_ += "}\n\n";
  }

  void gen_relation() {
    const Comp& a = comps_[0];
    const Comp& c = comps_[1];
    bool input = chance(0.5);
    std::vector<Var> scope;
    for (const auto& v : input ? a.inputs : a.outputs) scope.push_back({"a." + v.name, v.ty});
    for (const auto& v : input ? c.inputs : c.outputs) scope.push_back({"c." + v.name, v.ty});
    out_ += "relation R0 " + std::string(input ? "input " : "output ") + a.name + " -> " + c.name + " {\n";
    out_ += "  holds " + expr(scope, Ty{}, 3) + ";\n}\n\n";
  }

  void gen_galois() {
    out_ += "galois G0 {\n  horizon " + std::to_string(pick(1, 3)) + ";\n";
    int n = pick(1, 2);
    for (int i = 0; i < n; ++i) {
      std::string lo = std::to_string(pick(-5, 0));
      out_ += "  map gc" + std::to_string(i) + ": int[-5,5] -> ga" + std::to_string(i) + ": bool {\n";
      out_ += "    f c > " + lo + ";\n    g a == (c > " + lo + ");\n";
      if (chance(0.7)) out_ += "    universe " + int_lit(-5, -1) + ", " + int_lit(0, 5) + ";\n";
      if (chance(0.3)) out_ += "    abstract universe false, true;\n";
      out_ += "  }\n";
    }
    out_ += "}\n\n";
  }

  std::mt19937_64 rng_;
  std::string out_;
  std::vector<int> enums_;
  std::vector<Comp> comps_;
};

// Bytes biased toward model syntax so that the parser gets past the lexer.
inline std::string random_bytes(std::mt19937_64& rng, std::size_t max_len) {
  static const std::string alphabet =
      "component input output states initial transitions when do := -> { } ( ) ; : , . "
      "int[0,5] bool real enum relation galois holds map f g universe 1.5e9 -3 if then else "
      "abc ## // \n";
  std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::bernoulli_distribution(0.5)(rng)) {
      s += static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
    } else {
      s += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    }
  }
  return s;
}

}  // namespace sctest
