#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "streamcheck/core/data_type.hpp"
#include "streamcheck/core/message.hpp"

namespace streamcheck {

// Finite prefix of a timed stream: one message per tick, ticks 1..horizon.
class TimedStream {
 public:
  explicit TimedStream(DataType elem_type) : elem_type_(std::move(elem_type)) {}
  // Every message must conform to elem_type (DomainError otherwise).
  TimedStream(DataType elem_type, std::vector<Message> messages);
  TimedStream(DataType elem_type, const std::vector<Scalar>& values);

  const DataType& elem_type() const { return elem_type_; }
  std::size_t horizon() const { return messages_.size(); }
  bool empty() const { return messages_.empty(); }
  const std::vector<Message>& messages() const { return messages_; }

  void push_back(Message m);

  friend bool operator==(const TimedStream&, const TimedStream&) = default;

 private:
  DataType elem_type_;
  std::vector<Message> messages_;
};

// Message at 1-based tick t. Throws IndexError unless 1 <= t <= horizon.
const Message& stream_at(const TimedStream& s, std::size_t t);

// First t messages. Throws IndexError if t > horizon.
TimedStream prefix(const TimedStream& s, std::size_t t);

struct Channel {
  std::string name;
  DataType type;

  friend bool operator==(const Channel&, const Channel&) = default;
};

// Assignment of a stream to every channel of one interface side.
struct ChannelHistory {
  std::map<std::string, TimedStream> bindings;
  std::size_t horizon = 0;

  ChannelHistory() = default;
  explicit ChannelHistory(std::size_t n) : horizon(n) {}
  // Horizon is taken from the first binding (0 when empty).
  explicit ChannelHistory(std::map<std::string, TimedStream> b);

  const TimedStream& at(const std::string& channel) const;
  bool has(const std::string& channel) const { return bindings.count(channel) != 0; }

  friend bool operator==(const ChannelHistory&, const ChannelHistory&) = default;
};

ChannelHistory prefix(const ChannelHistory& h, std::size_t t);

struct HistoryViolation {
  enum class Cause { UnboundChannel, TypeMismatch, HorizonMismatch, UndeclaredChannel };
  std::string channel;
  Cause cause;
  std::string detail;
};

std::string to_string(HistoryViolation::Cause cause);

// Reports every unbound channel, type mismatch and horizon disagreement.
// Empty result means the history is well-formed for `channels`.
std::vector<HistoryViolation> validate_history(const ChannelHistory& h,
                                               const std::vector<Channel>& channels);

}  // namespace streamcheck
