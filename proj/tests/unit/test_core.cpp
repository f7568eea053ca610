#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "streamcheck/core/message.hpp"
#include "streamcheck/core/stream.hpp"
#include "streamcheck/error.hpp"
#include "support.hpp"

using namespace streamcheck;
using namespace sctest;

TEST(DataType, Spelling) {
  EXPECT_EQ(DataType::boolean().to_string(), "bool");
  EXPECT_EQ(DataType::integer().to_string(), "int");
  EXPECT_EQ(DataType::integer(0, 255).to_string(), "int[0,255]");
  EXPECT_EQ(DataType::real().to_string(), "real");
  EXPECT_EQ(DataType::enumeration("AccStateT", {"Active", "Standby"}).to_string(), "AccStateT");
}

TEST(DataType, Cardinality) {
  EXPECT_EQ(DataType::boolean().cardinality(), 2u);
  EXPECT_EQ(DataType::integer(-100, 100).cardinality(), 201u);
  EXPECT_EQ(DataType::real().cardinality(), 0u);
  EXPECT_EQ(DataType::integer().cardinality(), std::numeric_limits<std::size_t>::max());
  EXPECT_EQ(DataType::enumeration("E", {"A", "B", "C"}).cardinality(), 3u);
}

TEST(DataType, EnumsCompareByDefinition) {
  auto a = DataType::enumeration("E", {"A", "B"});
  auto b = DataType::enumeration("E", {"A", "B"});
  auto c = DataType::enumeration("E", {"B", "A"});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_NE(DataType::integer(0, 1), DataType::integer(0, 2));
}

TEST(Message, RejectsOutOfDomain) {
  EXPECT_THROW(Message(DataType::integer(0, 255), std::int64_t{256}), DomainError);
  EXPECT_THROW(Message(DataType::integer(0, 255), std::int64_t{-1}), DomainError);
  EXPECT_THROW(Message(DataType::boolean(), std::int64_t{1}), DomainError);
  EXPECT_THROW(Message(DataType::real(), std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_NO_THROW(Message(DataType::integer(0, 255), std::int64_t{255}));
}

TEST(Message, EnumLabelsBelongToTheirEnum) {
  auto t = DataType::enumeration("E", {"A", "B"});
  auto u = DataType::enumeration("F", {"A", "B"});
  Message a = *parse_message(t, "A");
  EXPECT_THROW(Message(u, a.value()), DomainError);
  EXPECT_EQ(a.as_enum().label(), "A");
}

TEST(Message, Parse) {
  EXPECT_EQ(parse_message(DataType::boolean(), "true"), Message::of(true));
  EXPECT_EQ(parse_message(DataType::integer(0, 9), "7")->as_int(), 7);
  EXPECT_EQ(parse_message(DataType::real(), "-3.6")->as_real(), -3.6);
  EXPECT_EQ(parse_message(DataType::real(), "2")->as_real(), 2.0);
  EXPECT_FALSE(parse_message(DataType::integer(0, 9), "10"));
  EXPECT_FALSE(parse_message(DataType::integer(), "1.5"));
  EXPECT_FALSE(parse_message(DataType::boolean(), "1"));
  EXPECT_FALSE(parse_message(DataType::real(), "nan"));
  EXPECT_FALSE(parse_message(DataType::enumeration("E", {"A"}), "B"));
  EXPECT_FALSE(parse_message(DataType::integer(), "99999999999999999999"));
}

TEST(Message, DefaultValue) {
  EXPECT_EQ(default_message(DataType::boolean()), Message::of(false));
  EXPECT_EQ(default_message(DataType::integer(3, 9)).as_int(), 3);
  EXPECT_EQ(default_message(DataType::integer(-3, 9)).as_int(), 0);
  EXPECT_EQ(default_message(DataType::enumeration("E", {"X", "Y"})).as_enum().label(), "X");
}

TEST(Message, RealTextRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    double v = std::ldexp(mant(rng), expo(rng));
    std::string s = format_real(v);
    EXPECT_NE(s.find_first_of(".e"), std::string::npos) << s;
    auto back = parse_message(DataType::real(), s);
    ASSERT_TRUE(back) << s;
    EXPECT_EQ(back->as_real(), v) << s;
  }
  EXPECT_EQ(format_real(2.0), "2.0");
}

TEST(Scalar, EqualityWithTolerance) {
  EXPECT_TRUE(scalar_equal(Scalar{1.0}, Scalar{1.0 + 1e-12}, 1e-9));
  EXPECT_FALSE(scalar_equal(Scalar{1.0}, Scalar{1.1}, 1e-9));
  EXPECT_FALSE(scalar_equal(Scalar{true}, Scalar{std::int64_t{1}}));
}

TEST(TimedStream, OneBasedAccess) {
  auto s = ints({10, 20, 30});
  EXPECT_EQ(s.horizon(), 3u);
  EXPECT_EQ(stream_at(s, 1).as_int(), 10);
  EXPECT_EQ(stream_at(s, 3).as_int(), 30);
  EXPECT_THROW(stream_at(s, 0), IndexError);
  EXPECT_THROW(stream_at(s, 4), IndexError);
}

TEST(TimedStream, Prefix) {
  auto s = ints({1, 2, 3});
  EXPECT_EQ(prefix(s, 2), ints({1, 2}));
  EXPECT_EQ(prefix(s, 0).horizon(), 0u);
  EXPECT_EQ(prefix(s, 3), s);
  EXPECT_THROW(prefix(s, 4), IndexError);
}

TEST(TimedStream, ElementTypeIsEnforced) {
  TimedStream s(DataType::integer(0, 5));
  EXPECT_THROW(s.push_back(Message::of(true)), DomainError);
  EXPECT_THROW(s.push_back(Message(DataType::integer(), std::int64_t{9})), DomainError);
  EXPECT_THROW(TimedStream(DataType::boolean(), std::vector<Scalar>{Scalar{1.0}}), DomainError);
}

TEST(ChannelHistory, Validation) {
  std::vector<Channel> chans = {{"x", DataType::boolean()}, {"y", DataType::integer()}};
  EXPECT_TRUE(validate_history(history({{"x", bools({true})}, {"y", ints({1})}}), chans).empty());

  auto v = validate_history(history({{"x", bools({true})}}), chans);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].cause, HistoryViolation::Cause::UnboundChannel);
  EXPECT_EQ(v[0].channel, "y");

  v = validate_history(history({{"x", ints({1})}, {"y", ints({1})}}), chans);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].cause, HistoryViolation::Cause::TypeMismatch);

  v = validate_history(history({{"x", bools({true, false})}, {"y", ints({1})}}), chans);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].cause, HistoryViolation::Cause::HorizonMismatch);

  v = validate_history(history({{"x", bools({true})}, {"y", ints({1})}, {"z", ints({1})}}), chans);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].cause, HistoryViolation::Cause::UndeclaredChannel);
}

TEST(ChannelHistory, PrefixAndLookup) {
  auto h = history({{"x", bools({true, false, true})}});
  EXPECT_EQ(h.horizon, 3u);
  auto p = prefix(h, 1);
  EXPECT_EQ(p.horizon, 1u);
  EXPECT_EQ(p.at("x"), bools({true}));
  EXPECT_THROW(h.at("nope"), Error);
}
