#include "streamcheck/format/test_vectors.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "streamcheck/format/suggest.hpp"

namespace streamcheck {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

struct Cell {
  std::string text;
  std::size_t column;  // 1-based byte column of the cell start
};

std::vector<Cell> split(std::string_view line) {
  std::vector<Cell> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    std::string_view raw = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    std::size_t lead = 0;
    while (lead < raw.size() && (raw[lead] == ' ' || raw[lead] == '\t')) ++lead;
    out.push_back({trim(raw), start + lead + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// One section: header plus rows, with source lines for diagnostics.
struct Section {
  std::string kind;  // inputs, expected, params
  std::size_t line = 0;
  std::vector<Cell> header;
  std::size_t header_line = 0;
  std::vector<std::pair<std::size_t, std::vector<Cell>>> rows;
};

struct RawCase {
  std::string name;
  std::size_t line = 0;
  std::vector<Section> sections;
};

class Reader {
 public:
  Reader(const SyntacticInterface& iface, std::vector<Diagnostic>& diags) : iface_(iface), d_(diags) {}

  void report(std::size_t line, std::size_t col, std::string msg) {
    d_.push_back({{line, col}, std::move(msg), {}});
  }

  std::optional<ChannelHistory> history(const Section& s, const std::vector<Channel>& channels,
                                        const char* side) {
    bool ok = true;
    std::vector<const Channel*> cols;
    std::set<std::string> seen;
    for (const auto& h : s.header) {
      auto it = std::find_if(channels.begin(), channels.end(), [&](const Channel& c) { return c.name == h.text; });
      if (it == channels.end()) {
        std::vector<std::string> names;
        for (const auto& c : channels) names.push_back(c.name);
        std::string msg = "unknown channel " + h.text;
        std::string s2 = closest_match(h.text, names);
        if (!s2.empty()) msg += "; did you mean " + s2 + "?";
        report(s.header_line, h.column, msg);
        ok = false;
        cols.push_back(nullptr);
        continue;
      }
      if (!seen.insert(h.text).second) {
        report(s.header_line, h.column, "duplicate column " + h.text);
        ok = false;
      }
      cols.push_back(&*it);
    }
    for (const auto& c : channels) {
      if (!seen.count(c.name)) {
        report(s.header_line ? s.header_line : s.line, 1, std::string("missing ") + side + " channel " + c.name);
        ok = false;
      }
    }
    std::map<std::string, TimedStream> streams;
    for (const auto* c : cols) {
      if (c) streams.emplace(c->name, TimedStream(c->type));
    }
    for (const auto& [line, cells] : s.rows) {
      if (cells.size() != s.header.size()) {
        report(line, 1, "row has " + std::to_string(cells.size()) + " cells, header has " +
                            std::to_string(s.header.size()));
        ok = false;
        continue;
      }
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!cols[i]) continue;
        auto m = parse_message(cols[i]->type, cells[i].text);
        if (!m) {
          std::string msg = "invalid value '" + cells[i].text + "' for " + cols[i]->name + " (" +
                            cols[i]->type.to_string() + ")";
          if (cols[i]->type.is_enum()) {
            std::string sug = closest_match(cells[i].text, cols[i]->type.enum_def()->labels);
            if (!sug.empty()) msg += "; did you mean " + sug + "?";
          }
          report(line, cells[i].column, msg);
          ok = false;
          continue;
        }
        streams.at(cols[i]->name).push_back(*m);
      }
    }
    if (!ok) return std::nullopt;
    ChannelHistory h(s.rows.size());
    h.bindings = std::move(streams);
    return h;
  }

  std::optional<VectorCase> build(const RawCase& rc) {
    VectorCase vc;
    vc.test.name = rc.name;
    bool ok = true;
    bool have_inputs = false;
    for (const auto& s : rc.sections) {
      if (s.kind == "params") {
        if (!vc.params.empty()) {
          report(s.line, 1, "duplicate #params section");
          ok = false;
          continue;
        }
        for (const auto& h : s.header) vc.params.names.push_back(h.text);
        for (const auto& [line, cells] : s.rows) {
          if (cells.size() != s.header.size()) {
            report(line, 1, "row has " + std::to_string(cells.size()) + " cells, header has " +
                                std::to_string(s.header.size()));
            ok = false;
            continue;
          }
          std::vector<std::string> row;
          for (const auto& c : cells) row.push_back(c.text);
          vc.params.rows.push_back(std::move(row));
        }
        continue;
      }
      bool inputs = s.kind == "inputs";
      if (inputs && have_inputs) {
        report(s.line, 1, "duplicate #inputs section");
        ok = false;
        continue;
      }
      auto h = history(s, inputs ? iface_.inputs : iface_.outputs, inputs ? "input" : "output");
      if (!h) {
        ok = false;
        continue;
      }
      if (inputs) {
        have_inputs = true;
        vc.test.input = std::move(*h);
      } else {
        vc.test.expected.groups.push_back(std::move(*h));
      }
    }
    if (!have_inputs && ok) {
      report(rc.line, 1, "test case " + rc.name + " has no #inputs section");
      ok = false;
    }
    if (ok) {
      for (const auto& g : vc.test.expected.groups) {
        if (g.horizon != vc.test.input.horizon) {
          report(rc.line, 1, "test case " + rc.name + ": expected has " + std::to_string(g.horizon) +
                                 " rows, inputs have " + std::to_string(vc.test.input.horizon));
          ok = false;
        }
      }
    }
    if (!ok) return std::nullopt;
    return vc;
  }

 private:
  const SyntacticInterface& iface_;
  std::vector<Diagnostic>& d_;
};

}  // namespace

VectorParseResult parse_testcases(std::string_view text, const SyntacticInterface& iface,
                                  const std::string& default_name) {
  VectorParseResult r;
  std::vector<RawCase> raw;
  Section* current = nullptr;
  bool awaiting_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  // Skip a UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string directive = t.substr(1);
      std::string word = directive.substr(0, directive.find_first_of(" \t"));
      if (word == "testcase") {
        std::string name = trim(directive.substr(word.size()));
        if (name.empty()) {
          r.diagnostics.push_back({{line_no, 1}, "#testcase needs a name", {}});
          name = default_name;
        }
        raw.push_back({name, line_no, {}});
        current = nullptr;
      } else if (word == "inputs" || word == "expected" || word == "params") {
        if (raw.empty()) raw.push_back({default_name, line_no, {}});
        raw.back().sections.push_back({word, line_no, {}, 0, {}});
        current = &raw.back().sections.back();
        awaiting_header = true;
      }
      continue;
    }
    if (!current) {
      r.diagnostics.push_back({{line_no, 1}, "data outside a #inputs, #expected or #params section", {}});
      continue;
    }
    if (awaiting_header) {
      current->header = split(line);
      current->header_line = line_no;
      awaiting_header = false;
    } else {
      current->rows.push_back({line_no, split(line)});
    }
  }
  std::set<std::string> names;
  Reader reader(iface, r.diagnostics);
  for (const auto& rc : raw) {
    if (!names.insert(rc.name).second) {
      r.diagnostics.push_back({{rc.line, 1}, "duplicate test case " + rc.name, {}});
      continue;
    }
    if (auto vc = reader.build(rc)) r.cases.push_back(std::move(*vc));
  }
  return r;
}

std::vector<VectorCase> load_testcases(std::string_view text, const SyntacticInterface& iface,
                                       const std::string& default_name) {
  VectorParseResult r = parse_testcases(text, iface, default_name);
  if (!r.ok()) throw ParseError(std::move(r.diagnostics));
  return std::move(r.cases);
}

std::vector<VectorCase> load_testcases_file(const std::string& path, const SyntacticInterface& iface) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  VectorParseResult r = parse_testcases(ss.str(), iface, stem.empty() ? "case" : stem);
  if (!r.ok()) {
    for (auto& d : r.diagnostics) d.file = path;
    throw ParseError(std::move(r.diagnostics));
  }
  return std::move(r.cases);
}

namespace {

void write_history(std::ostream& os, const char* section, const ChannelHistory& h) {
  os << "#" << section << "\n";
  bool first = true;
  for (const auto& [name, s] : h.bindings) {
    os << (first ? "" : ",") << name;
    first = false;
  }
  os << "\n";
  for (std::size_t t = 0; t < h.horizon; ++t) {
    first = true;
    for (const auto& [name, s] : h.bindings) {
      os << (first ? "" : ",") << s.messages()[t].to_string();
      first = false;
    }
    os << "\n";
  }
}

}  // namespace

std::string serialize_testcases(const std::vector<VectorCase>& cases) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& c = cases[i];
    if (i) os << "\n";
    os << "#testcase " << c.test.name << "\n";
    write_history(os, "inputs", c.test.input);
    for (const auto& g : c.test.expected.groups) write_history(os, "expected", g);
    if (!c.params.empty()) {
      os << "#params\n";
      for (std::size_t k = 0; k < c.params.names.size(); ++k) os << (k ? "," : "") << c.params.names[k];
      os << "\n";
      for (const auto& row : c.params.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
        os << "\n";
      }
    }
  }
  return os.str();
}

std::string serialize_testcases(const std::vector<TestCase>& cases) {
  std::vector<VectorCase> v;
  for (const auto& c : cases) v.push_back({c, {}});
  return serialize_testcases(v);
}

ParamBinding bind_params(const ConcretizerSpec& conc, const ParamTable& table, std::size_t horizon) {
  ParamBinding b;
  for (std::size_t k = 0; k < table.names.size(); ++k) {
    const std::string& name = table.names[k];
    const ConcretizerParam* p = conc.find(name);
    if (!p) throw SpecError("unknown parameter " + name + " for concretizer " + conc.name);
    if (table.rows.empty()) throw SpecError("parameter " + name + " has no value");
    auto cell = [&](std::size_t row) {
      const std::string& text = table.rows[row][k];
      auto m = parse_message(p->type, text);
      if (!m) {
        throw SpecError("invalid value '" + text + "' for parameter " + name + " (" +
                        p->type.to_string() + ")");
      }
      return *m;
    };
    if (p->kind == ConcretizerParam::Kind::Constant) {
      b.constants.insert_or_assign(name, cell(0));
      continue;
    }
    TimedStream s(p->type);
    if (table.rows.size() == 1) {
      Message m = cell(0);
      for (std::size_t t = 0; t < horizon; ++t) s.push_back(m);
    } else {
      if (table.rows.size() < horizon) {
        throw SpecError("stream parameter " + name + " has " + std::to_string(table.rows.size()) +
                        " rows, need " + std::to_string(horizon));
      }
      for (std::size_t t = 0; t < horizon; ++t) s.push_back(cell(t));
    }
    b.streams.insert_or_assign(name, std::move(s));
  }
  return b;
}

}  // namespace streamcheck
