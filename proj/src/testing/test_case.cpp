#include "streamcheck/testing/test_case.hpp"

#include <algorithm>

#include "streamcheck/error.hpp"

namespace streamcheck {

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Pass: return "pass";
    case Verdict::Status::Fail: return "fail";
    case Verdict::Status::Error: return "error";
  }
  return "?";
}

namespace {

Verdict error_verdict(std::string msg) {
  Verdict v;
  v.status = Verdict::Status::Error;
  v.error = std::move(msg);
  return v;
}

// Shape problems between actual and one expected group, or empty.
std::string shape_mismatch(const ChannelHistory& actual, const ChannelHistory& group) {
  if (actual.horizon != group.horizon) {
    return "horizon mismatch: actual " + std::to_string(actual.horizon) + ", expected " +
           std::to_string(group.horizon);
  }
  for (const auto& [name, s] : group.bindings) {
    auto it = actual.bindings.find(name);
    if (it == actual.bindings.end()) return "expected channel " + name + " is not an output";
    if (!(it->second.elem_type() == s.elem_type())) {
      return "type mismatch on " + name + ": actual " + it->second.elem_type().to_string() +
             ", expected " + s.elem_type().to_string();
    }
    if (s.horizon() != group.horizon) return "expected stream " + name + " has wrong length";
  }
  for (const auto& [name, s] : actual.bindings) {
    if (!group.bindings.count(name)) return "no expected stream for output " + name;
  }
  return {};
}

Verdict compare_group(const ChannelHistory& actual, const ChannelHistory& group, double eps) {
  Verdict v;
  for (std::size_t t = 1; t <= actual.horizon; ++t) {
    std::string line = "t=" + std::to_string(t);
    for (const auto& [name, s] : actual.bindings) {
      const Message& a = s.messages()[t - 1];
      const Message& e = group.at(name).messages()[t - 1];
      bool same = scalar_equal(a.value(), e.value(), eps);
      line += " " + name + "=" + a.to_string();
      if (!same) {
        line += " (expected " + e.to_string() + ")";
        bool seen = std::any_of(v.divergences.begin(), v.divergences.end(),
                                [&](const Divergence& d) { return d.channel == name; });
        if (!seen) v.divergences.push_back({t, name, e, a});
      }
    }
    v.log.push_back(std::move(line));
  }
  if (!v.divergences.empty()) {
    v.status = Verdict::Status::Fail;
    v.first_divergence = v.divergences.front();
  }
  return v;
}

}  // namespace

Verdict compare_histories(const ChannelHistory& actual, const ExpectedResult& expected,
                          double eps) {
  if (expected.groups.empty()) return error_verdict("test case has no expected result");
  std::optional<Verdict> best;
  for (const auto& group : expected.groups) {
    std::string bad = shape_mismatch(actual, group);
    if (!bad.empty()) return error_verdict(bad);
    Verdict v = compare_group(actual, group, eps);
    if (v.passed()) return v;
    if (!best || v.first_divergence->tick > best->first_divergence->tick) best = std::move(v);
  }
  return *best;
}

std::pair<ChannelHistory, Verdict> execute_test(const ComponentSpec& spec, const TestCase& tc,
                                                double eps, const SimOptions& options) {
  try {
    ChannelHistory actual = run(spec, tc.input, tc.input.horizon, options);
    Verdict v = compare_histories(actual, tc.expected, eps);
    return {std::move(actual), std::move(v)};
  } catch (const Error& e) {
    return {ChannelHistory(), error_verdict(e.what())};
  }
}

SuiteReport suite_run(const ComponentSpec& spec, const std::vector<TestCase>& suite, double eps,
                      const SimOptions& options) {
  SuiteReport report;
  for (const auto& tc : suite) {
    auto [actual, verdict] = execute_test(spec, tc, eps, options);
    switch (verdict.status) {
      case Verdict::Status::Pass: ++report.passed; break;
      case Verdict::Status::Fail: ++report.failed; break;
      case Verdict::Status::Error: ++report.errors; break;
    }
    report.cases.push_back({tc.name, std::move(actual), std::move(verdict)});
  }
  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const CaseReport& a, const CaseReport& b) { return a.name < b.name; });
  return report;
}

}  // namespace streamcheck
