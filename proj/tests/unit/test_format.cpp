#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "random_model.hpp"
#include "streamcheck/error.hpp"
#include "streamcheck/format/lexer.hpp"
#include "streamcheck/format/suggest.hpp"
#include "streamcheck/format/test_vectors.hpp"
#include "support.hpp"

using namespace streamcheck;
using namespace sctest;

namespace {

std::vector<std::string> fixture_models() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(STREAMCHECK_FIXTURE_DIR)) {
    auto p = e.path().string();
    if (p.size() > 8 && p.substr(p.size() - 8) == ".scm.txt") out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string first_message(const ParseResult& r) {
  return r.diagnostics.empty() ? std::string() : r.diagnostics[0].to_string();
}

const char* kSmall = R"(
enum Mode { On, Off }
component M {
  input x: int[0,9];
  output m: Mode = Off;
  states S;
  initial S;
  transitions { S -> S when x > 4 do m := On; }
}
)";

}  // namespace

TEST(Lexer, Tokens) {
  std::vector<Diagnostic> d;
  auto t = tokenize("a.b := 1.5e3 -> x<=3 # c\n// c\n!y", d);
  EXPECT_TRUE(d.empty());
  ASSERT_EQ(t.size(), 10u);
  EXPECT_EQ(t[0].text, "a.b");
  EXPECT_TRUE(t[1].is(":="));
  EXPECT_EQ(t[2].kind, Token::Kind::Real);
  EXPECT_TRUE(t[3].is("->"));
  EXPECT_TRUE(t[5].is("<="));
  EXPECT_EQ(t[6].kind, Token::Kind::Int);
  EXPECT_TRUE(t[7].is("!"));
  EXPECT_EQ(t[8].loc.line, 3u);
  EXPECT_EQ(t[9].kind, Token::Kind::End);
}

TEST(Lexer, BadByteIsReportedWithLocation) {
  std::vector<Diagnostic> d;
  tokenize("ab\n  @", d);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].loc.line, 2u);
  EXPECT_EQ(d[0].loc.column, 3u);
}

TEST(Suggest, ClosestMatch) {
  EXPECT_EQ(closest_match("Actve", {"Active", "Standby"}), "Active");
  EXPECT_EQ(closest_match("xyzzy", {"Active", "Standby"}), "");
}

TEST(ModelParser, AllFixturesParse) {
  auto files = fixture_models();
  ASSERT_GE(files.size(), 4u);
  for (const auto& f : files) {
    EXPECT_NO_THROW(load_model_file(f)) << f;
  }
}

TEST(ModelParser, FixturesRoundTrip) {
  for (const auto& f : fixture_models()) {
    auto doc = load_model_file(f);
    auto text = serialize_model(doc);
    auto again = parse_model(text);
    ASSERT_TRUE(again.ok()) << f << ": " << first_message(again) << "\n" << text;
    EXPECT_EQ(again.document, doc) << f;
    EXPECT_EQ(serialize_model(again.document), text) << f;
  }
}

TEST(ModelParser, RandomDocumentsRoundTrip) {
  RandomModel gen(99);
  for (int i = 0; i < 200; ++i) {
    auto text = gen.generate();
    auto r = parse_model(text);
    ASSERT_TRUE(r.ok()) << first_message(r) << "\n" << text;
    auto out = serialize_model(r.document);
    auto back = parse_model(out);
    ASSERT_TRUE(back.ok()) << first_message(back) << "\n" << out;
    EXPECT_EQ(back.document, r.document) << out;
  }
}

TEST(ModelParser, RandomBytesNeverThrow) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    auto bytes = random_bytes(rng, 300);
    EXPECT_NO_THROW(parse_model(bytes));
  }
}

TEST(ModelParser, SyntaxErrorLocation) {
  auto r = parse_model("component A {\n  input x bool;\n}");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics[0].loc.line, 2u);
  EXPECT_EQ(r.diagnostics[0].loc.column, 11u);
  EXPECT_THROW(load_model("component A {"), ParseError);
}

TEST(ModelParser, ReferenceErrorsAreCollected) {
  auto r = parse_model(R"(
component A {
  input x: int;
  output y: int = 0;
  states S;
  initial S;
  transitions {
    S -> T do y := z;
    S -> S when x do y := 1;
  }
}
)");
  ASSERT_GE(r.diagnostics.size(), 3u);
  for (const auto& d : r.diagnostics) EXPECT_GT(d.loc.line, 0u) << d.message;
}

TEST(ModelParser, DuplicatesAndUnknownTypes) {
  auto r = parse_model("enum E { A }\nenum E { B }");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(first_message(r).find("duplicate"), std::string::npos);
  r = parse_model("component A { input x: Colour; }");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(first_message(r).find("Colour"), std::string::npos);
  r = parse_model("enum E { A }\nenum F { A }");
  EXPECT_FALSE(r.ok());
}

TEST(ModelParser, UnknownComponentSuggestion) {
  auto r = parse_model(std::string(kSmall) +
                       "component W { causality weak; input x: int[0,9]; output y: bool; states S; initial S; }\n"
                       "relation R input Mm -> W { holds true; }");
  ASSERT_FALSE(r.ok());
  EXPECT_NE(first_message(r).find("did you mean M?"), std::string::npos) << first_message(r);
}

TEST(ModelParser, DeepNestingIsRejectedNotCrashed) {
  std::string deep = "component A { causality weak; input x: int; output y: int; states S; initial S; "
                     "transitions { S -> S do y := " +
                     std::string(5000, '(') + "x" + std::string(5000, ')') + "; } }";
  auto r = parse_model(deep);
  EXPECT_FALSE(r.ok());
}

TEST(ModelParser, IntegerOverflowLiteral) {
  auto r = parse_model(
      "component A { causality weak; input x: int; output y: int; states S; initial S; "
      "transitions { S -> S do y := 99999999999999999999; } }");
  EXPECT_FALSE(r.ok());
}

TEST(ModelParser, WriterOmitsTrueGuards) {
  auto text = serialize_model(load_model(kSmall));
  EXPECT_NE(text.find("S -> S when (x > 4) do m := On;"), std::string::npos) << text;
  EXPECT_EQ(text.find("when true"), std::string::npos);
}

TEST(TestVectors, BrakeOverrideFile) {
  auto doc = load_fixture("brake_override.scm.txt");
  const auto& ifc = doc.component("BrakeOverride")->interface();
  auto cases = load_testcases_file(fixture("brake_override.tv.csv"), ifc);
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(cases[0].test.name, "brake_override");
  EXPECT_EQ(cases[0].test.input.horizon, 5u);
  ASSERT_EQ(cases[0].test.expected.groups.size(), 1u);
  auto text = serialize_testcases(cases);
  EXPECT_EQ(load_testcases(text, ifc), cases);
}

TEST(TestVectors, InvalidLabelSuggestion) {
  auto doc = load_fixture("brake_override.scm.txt");
  const auto& ifc = doc.component("BrakeOverride")->interface();
  auto r = parse_testcases("#inputs\nDriverBrake,AccBrake\n1,2\n#expected\nAccState\nActve\n", ifc);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].loc.line, 6u);
  EXPECT_NE(r.diagnostics[0].message.find("did you mean Active?"), std::string::npos)
      << r.diagnostics[0].message;
}

TEST(TestVectors, StructuralErrors) {
  auto doc = load_fixture("brake_override.scm.txt");
  const auto& ifc = doc.component("BrakeOverride")->interface();
  auto r = parse_testcases("#inputs\nDriverBrake\n1\n", ifc);
  EXPECT_FALSE(r.ok());
  r = parse_testcases("#inputs\nDriverBrake,AccBrak\n1,2\n", ifc);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.diagnostics[0].message.find("did you mean AccBrake?"), std::string::npos);
  r = parse_testcases("#inputs\nDriverBrake,AccBrake\n1,2\n3\n", ifc);
  EXPECT_FALSE(r.ok());
  r = parse_testcases("#inputs\nDriverBrake,AccBrake\n1,2\n#expected\nAccState\nActive\nActive\n", ifc);
  EXPECT_FALSE(r.ok());
  r = parse_testcases("#inputs\nDriverBrake,AccBrake\n1,999\n", ifc);
  EXPECT_FALSE(r.ok());
  EXPECT_THROW(load_testcases("#inputs\nDriverBrake\n1\n", ifc), ParseError);
}

TEST(TestVectors, MultipleCasesAndGroups) {
  auto doc = load_fixture("brake_override.scm.txt");
  const auto& ifc = doc.component("BrakeOverride")->interface();
  const char* text =
      "\xEF\xBB\xBF# two cases\n"
      "#testcase one\n#inputs\nDriverBrake,AccBrake\n1,2\n"
      "#expected\nAccState\nActive\n#expected\nAccState\nStandby\n"
      "#testcase two\n#inputs\nAccBrake,DriverBrake\n5,6\n";
  auto r = parse_testcases(text, ifc);
  ASSERT_TRUE(r.ok()) << r.diagnostics[0].to_string();
  ASSERT_EQ(r.cases.size(), 2u);
  EXPECT_EQ(r.cases[0].test.expected.groups.size(), 2u);
  EXPECT_TRUE(r.cases[1].test.expected.groups.empty());
  EXPECT_EQ(stream_at(r.cases[1].test.input.at("DriverBrake"), 1).as_int(), 6);
  EXPECT_EQ(load_testcases(serialize_testcases(r.cases), ifc), r.cases);
  EXPECT_FALSE(parse_testcases("#testcase a\n#inputs\nDriverBrake,AccBrake\n1,2\n"
                               "#testcase a\n#inputs\nDriverBrake,AccBrake\n1,2\n",
                               ifc)
                   .ok());
}

TEST(TestVectors, RealsRoundTripExactly) {
  auto doc = load_fixture("encoder.scm.txt");
  const auto& ifc = doc.component("EncoderConcrete")->interface();
  auto cases = load_testcases_file(fixture("encoder_concrete.tv.csv"), ifc);
  EXPECT_EQ(cases[0].test.input.at("i_c"), reals({2.5, -3.6, 0.3}));
  EXPECT_EQ(load_testcases(serialize_testcases(cases), ifc), cases);
}

TEST(TestVectors, RandomBytesNeverThrow) {
  auto doc = load_fixture("brake_override.scm.txt");
  const auto& ifc = doc.component("BrakeOverride")->interface();
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    std::string s = "#inputs\nDriverBrake,AccBrake\n" + random_bytes(rng, 100);
    EXPECT_NO_THROW(parse_testcases(s, ifc));
  }
}

TEST(TestVectors, MissingFile) {
  SyntacticInterface ifc;
  EXPECT_THROW(load_testcases_file("/nonexistent/x.tv.csv", ifc), Error);
  EXPECT_THROW(load_model_file("/nonexistent/x.scm.txt"), Error);
}
