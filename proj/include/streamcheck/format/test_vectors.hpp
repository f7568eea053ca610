#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "streamcheck/abstraction/concretizer.hpp"
#include "streamcheck/format/diagnostic.hpp"
#include "streamcheck/model/component.hpp"
#include "streamcheck/testing/test_case.hpp"

namespace streamcheck {

// Raw `#params` section. Cells stay text until bound against a concretizer,
// whose declarations give the types.
struct ParamTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;

  bool empty() const { return names.empty(); }
  friend bool operator==(const ParamTable&, const ParamTable&) = default;
};

struct VectorCase {
  TestCase test;
  ParamTable params;

  friend bool operator==(const VectorCase&, const VectorCase&) = default;
};

struct VectorParseResult {
  std::vector<VectorCase> cases;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// File layout, one or more cases:
//
//   #testcase <name>          (optional for a single case)
//   #inputs
//   <input channel>,...       header, then one row per tick
//   #expected                 repeatable: one section per alternative group
//   <output channel>,...
//   #params                   optional
//   <param>,...
//
// Blank lines and other `#` lines are ignored. Input columns must cover the
// interface inputs exactly; expected columns its outputs. Never throws.
VectorParseResult parse_testcases(std::string_view text, const SyntacticInterface& iface,
                                  const std::string& default_name = "case");

// Throws ParseError.
std::vector<VectorCase> load_testcases(std::string_view text, const SyntacticInterface& iface,
                                       const std::string& default_name = "case");
std::vector<VectorCase> load_testcases_file(const std::string& path, const SyntacticInterface& iface);

std::string serialize_testcases(const std::vector<VectorCase>& cases);
std::string serialize_testcases(const std::vector<TestCase>& cases);

// Binds a params table against a concretizer. A single row binds stream
// parameters to a constant stream of `horizon` ticks; otherwise stream
// parameters need at least `horizon` rows and constants take the first row.
// Throws SpecError.
ParamBinding bind_params(const ConcretizerSpec& conc, const ParamTable& table, std::size_t horizon);

}  // namespace streamcheck
