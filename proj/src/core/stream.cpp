#include "streamcheck/core/stream.hpp"

#include <set>

#include "streamcheck/error.hpp"

namespace streamcheck {

TimedStream::TimedStream(DataType elem_type, std::vector<Message> messages)
    : elem_type_(std::move(elem_type)) {
  messages_.reserve(messages.size());
  for (auto& m : messages) push_back(std::move(m));
}

TimedStream::TimedStream(DataType elem_type, const std::vector<Scalar>& values)
    : elem_type_(std::move(elem_type)) {
  messages_.reserve(values.size());
  for (const auto& v : values) messages_.emplace_back(elem_type_, v);
}

void TimedStream::push_back(Message m) {
  if (!admits(elem_type_, m.value())) {
    throw DomainError("message " + m.to_string() + " does not conform to " +
                      elem_type_.to_string());
  }
  messages_.push_back(std::move(m));
}

const Message& stream_at(const TimedStream& s, std::size_t t) {
  if (t < 1 || t > s.horizon()) {
    throw IndexError("tick " + std::to_string(t) + " outside stream horizon " +
                     std::to_string(s.horizon()));
  }
  return s.messages()[t - 1];
}

TimedStream prefix(const TimedStream& s, std::size_t t) {
  if (t > s.horizon()) {
    throw IndexError("prefix length " + std::to_string(t) + " exceeds stream horizon " +
                     std::to_string(s.horizon()));
  }
  TimedStream out(s.elem_type());
  for (std::size_t i = 0; i < t; ++i) out.push_back(s.messages()[i]);
  return out;
}

ChannelHistory::ChannelHistory(std::map<std::string, TimedStream> b)
    : bindings(std::move(b)),
      horizon(bindings.empty() ? 0 : bindings.begin()->second.horizon()) {}

const TimedStream& ChannelHistory::at(const std::string& channel) const {
  auto it = bindings.find(channel);
  if (it == bindings.end()) throw IndexError("channel " + channel + " is not bound");
  return it->second;
}

ChannelHistory prefix(const ChannelHistory& h, std::size_t t) {
  if (t > h.horizon) {
    throw IndexError("prefix length " + std::to_string(t) + " exceeds history horizon " +
                     std::to_string(h.horizon));
  }
  ChannelHistory out(t);
  for (const auto& [name, s] : h.bindings) out.bindings.emplace(name, prefix(s, t));
  return out;
}

std::string to_string(HistoryViolation::Cause cause) {
  switch (cause) {
    case HistoryViolation::Cause::UnboundChannel:
      return "unbound channel";
    case HistoryViolation::Cause::TypeMismatch:
      return "type mismatch";
    case HistoryViolation::Cause::HorizonMismatch:
      return "horizon mismatch";
    case HistoryViolation::Cause::UndeclaredChannel:
      return "undeclared channel";
  }
  return "?";
}

std::vector<HistoryViolation> validate_history(const ChannelHistory& h,
                                               const std::vector<Channel>& channels) {
  std::vector<HistoryViolation> out;
  std::set<std::string> declared;
  for (const auto& c : channels) {
    declared.insert(c.name);
    auto it = h.bindings.find(c.name);
    if (it == h.bindings.end()) {
      out.push_back({c.name, HistoryViolation::Cause::UnboundChannel, "no stream bound"});
      continue;
    }
    const TimedStream& s = it->second;
    if (!(s.elem_type() == c.type)) {
      out.push_back({c.name, HistoryViolation::Cause::TypeMismatch,
                     "stream of " + s.elem_type().to_string() + " bound to channel of " +
                         c.type.to_string()});
    }
    if (s.horizon() != h.horizon) {
      out.push_back({c.name, HistoryViolation::Cause::HorizonMismatch,
                     "stream horizon " + std::to_string(s.horizon()) + ", history horizon " +
                         std::to_string(h.horizon)});
    }
  }
  for (const auto& [name, s] : h.bindings) {
    if (!declared.count(name)) {
      out.push_back({name, HistoryViolation::Cause::UndeclaredChannel,
                     "channel is not part of the interface"});
    }
  }
  return out;
}

}  // namespace streamcheck
