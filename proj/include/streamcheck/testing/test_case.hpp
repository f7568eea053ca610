#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "streamcheck/core/stream.hpp"
#include "streamcheck/model/component.hpp"
#include "streamcheck/model/simulator.hpp"

namespace streamcheck {

// Stream per input channel, all of one horizon.
using TestInput = ChannelHistory;

// Set-valued expected result: a pass needs the actual output history to equal
// at least one complete group. Deterministic components use one group.
struct ExpectedResult {
  std::vector<ChannelHistory> groups;

  friend bool operator==(const ExpectedResult&, const ExpectedResult&) = default;
};

struct TestCase {
  std::string name;
  TestInput input;
  ExpectedResult expected;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

struct Divergence {
  std::size_t tick = 0;
  std::string channel;
  Message expected;
  Message actual;
};

struct Verdict {
  enum class Status { Pass, Fail, Error };
  Status status = Status::Pass;
  // Earliest divergence; set iff status == Fail.
  std::optional<Divergence> first_divergence;
  // First divergence per channel, ordered by tick then channel.
  std::vector<Divergence> divergences;
  // One line per tick: actual vs expected values of every output.
  std::vector<std::string> log;
  std::string error;

  bool passed() const { return status == Status::Pass; }
};

std::string to_string(Verdict::Status s);

// Compares actual outputs with every expected group (reals within eps). On
// failure, reports the group whose first divergence is latest.
Verdict compare_histories(const ChannelHistory& actual, const ExpectedResult& expected,
                          double eps = 0.0);

// Runs the component on the test input and compares. Simulation and typing
// problems become an Error verdict.
std::pair<ChannelHistory, Verdict> execute_test(const ComponentSpec& spec, const TestCase& tc,
                                                double eps = 0.0, const SimOptions& options = {});

struct CaseReport {
  std::string name;
  ChannelHistory actual;
  Verdict verdict;
};

struct SuiteReport {
  std::vector<CaseReport> cases;  // sorted by case name
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t errors = 0;

  bool all_passed() const { return failed == 0 && errors == 0; }
};

SuiteReport suite_run(const ComponentSpec& spec, const std::vector<TestCase>& suite,
                      double eps = 0.0, const SimOptions& options = {});

}  // namespace streamcheck
