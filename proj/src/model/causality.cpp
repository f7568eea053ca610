#include "streamcheck/model/causality.hpp"

#include <algorithm>
#include <random>

#include "streamcheck/error.hpp"

namespace streamcheck {

namespace {

std::vector<Message> default_domain(const DataType& t) {
  std::vector<Message> d;
  switch (t.kind()) {
    case DataType::Kind::Boolean:
      d = {Message::of(false), Message::of(true)};
      break;
    case DataType::Kind::Enumeration:
      for (std::size_t i = 0; i < t.enum_def()->labels.size(); ++i) {
        d.emplace_back(t, EnumLabel{t.enum_def(), i});
      }
      break;
    case DataType::Kind::Integer:
      if (t.cardinality() <= 16) {
        for (std::int64_t v = t.lo();; ++v) {
          d.emplace_back(t, v);
          if (v == t.hi()) break;
        }
      } else {
        std::int64_t a = std::clamp<std::int64_t>(-1, t.lo(), t.hi());
        std::int64_t b = std::clamp<std::int64_t>(1, t.lo(), t.hi());
        if (a == b) {
          a = t.lo();
          b = t.hi();
        }
        d = {Message(t, a), Message(t, b)};
      }
      break;
    case DataType::Kind::Real:
      d = {Message(t, -1.0), Message(t, 1.0)};
      break;
  }
  return d;
}

// First (tick, channel) where the two histories differ within ticks 1..upto.
std::optional<std::pair<std::size_t, std::string>> first_difference(const ChannelHistory& a,
                                                                    const ChannelHistory& b,
                                                                    std::size_t upto) {
  for (std::size_t t = 1; t <= upto; ++t) {
    for (const auto& [name, s] : a.bindings) {
      if (!(s.messages()[t - 1] == b.at(name).messages()[t - 1])) return std::make_pair(t, name);
    }
  }
  return std::nullopt;
}

class Search {
 public:
  Search(const ComponentSpec& spec, const CausalityOptions& opts)
      : sim_(spec, opts.sim), opts_(opts), n_(opts.horizon) {
    for (const auto& c : sim_.interface().inputs) {
      channels_.push_back(c);
      auto it = opts.domains.find(c.name);
      if (it != opts.domains.end()) {
        for (const auto& m : it->second) {
          if (!admits(c.type, m.value())) {
            throw SpecError("domain value " + m.to_string() + " is not a " + c.type.to_string() +
                            " for input " + c.name);
          }
        }
        domains_.push_back(it->second);
      } else {
        domains_.push_back(default_domain(c.type));
      }
      if (domains_.back().empty()) throw SpecError("empty domain for input " + c.name);
    }
    result_.mode = opts.mode ? *opts.mode
                             : (sim_.has_feedthrough() ? Causality::Weak : Causality::Strict);
  }

  CausalityResult run() {
    try {
      auto count = history_count();
      if (count && *count <= opts_.exhaustive_limit) {
        result_.exhaustive = true;
        exhaustive(*count);
      } else {
        random();
      }
    } catch (const Error& e) {
      result_.status = CausalityResult::Status::Error;
      result_.error = e.what();
    }
    return result_;
  }

 private:
  // Output prefix length that must agree when inputs agree on t ticks.
  std::size_t guarded(std::size_t t) const {
    return std::min(n_, result_.mode == Causality::Strict ? t + 1 : t);
  }
  std::size_t first_t() const { return result_.mode == Causality::Strict ? 0 : 1; }

  std::optional<std::size_t> history_count() const {
    std::size_t per_tick = 1;
    for (const auto& d : domains_) {
      if (per_tick > opts_.exhaustive_limit / d.size() + 1) return std::nullopt;
      per_tick *= d.size();
    }
    std::size_t total = 1;
    for (std::size_t t = 0; t < n_; ++t) {
      if (total > opts_.exhaustive_limit / per_tick + 1) return std::nullopt;
      total *= per_tick;
    }
    return total;
  }

  ChannelHistory make_history(const std::vector<std::vector<std::size_t>>& choice) const {
    ChannelHistory h(n_);
    for (std::size_t c = 0; c < channels_.size(); ++c) {
      TimedStream s(channels_[c].type);
      for (std::size_t t = 0; t < n_; ++t) s.push_back(domains_[c][choice[t][c]]);
      h.bindings.emplace(channels_[c].name, std::move(s));
    }
    return h;
  }

  ChannelHistory simulate(const ChannelHistory& in) {
    ++result_.histories;
    return sim_.run(in, n_);
  }

  void report(const ChannelHistory& x1, const ChannelHistory& x2, const ChannelHistory& y1,
              const ChannelHistory& y2, std::size_t t, std::size_t tick, const std::string& ch) {
    result_.status = CausalityResult::Status::Counterexample;
    result_.counterexample = CausalityCounterexample{x1, x2, y1, y2, t, tick, ch};
  }

  // Histories are enumerated with tick 1 as the most significant digit, so
  // all histories sharing a t-tick prefix form one contiguous block.
  void exhaustive(std::size_t count) {
    std::vector<ChannelHistory> ins;
    std::vector<ChannelHistory> outs;
    ins.reserve(count);
    outs.reserve(count);
    std::vector<std::vector<std::size_t>> choice(n_, std::vector<std::size_t>(channels_.size(), 0));
    for (std::size_t k = 0; k < count; ++k) {
      ins.push_back(make_history(choice));
      outs.push_back(simulate(ins.back()));
      // increment mixed-radix counter, last tick / last channel fastest
      for (std::size_t t = n_; t-- > 0;) {
        bool carry = true;
        for (std::size_t c = channels_.size(); c-- > 0;) {
          if (++choice[t][c] < domains_[c].size()) {
            carry = false;
            break;
          }
          choice[t][c] = 0;
        }
        if (!carry) break;
      }
    }
    std::size_t per_tick = 1;
    for (const auto& d : domains_) per_tick *= d.size();
    if (n_ == 0) return;
    for (std::size_t t = first_t(); t < n_; ++t) {
      std::size_t block = 1;
      for (std::size_t i = t; i < n_; ++i) block *= per_tick;
      std::size_t upto = guarded(t);
      for (std::size_t start = 0; start < count; start += block) {
        for (std::size_t k = start + 1; k < start + block; ++k) {
          if (auto d = first_difference(outs[start], outs[k], upto)) {
            report(ins[start], ins[k], outs[start], outs[k], t, d->first, d->second);
            return;
          }
        }
      }
    }
  }

  Message sample(std::size_t c, std::mt19937_64& rng) const {
    const Channel& ch = channels_[c];
    bool overridden = opts_.domains.count(ch.name) != 0;
    if (opts_.sample_wide && !overridden) {
      if (ch.type.is_integer() && ch.type.cardinality() > 16) {
        std::uniform_int_distribution<std::int64_t> dist(ch.type.lo(), ch.type.hi());
        return Message(ch.type, dist(rng));
      }
      if (ch.type.is_real()) {
        std::uniform_real_distribution<double> dist(-1000.0, 1000.0);
        return Message(ch.type, dist(rng));
      }
    }
    std::uniform_int_distribution<std::size_t> dist(0, domains_[c].size() - 1);
    return domains_[c][dist(rng)];
  }

  void random() {
    std::mt19937_64 rng(opts_.seed);
    std::size_t lo = first_t();
    if (n_ <= lo) return;
    std::uniform_int_distribution<std::size_t> pick_t(lo, n_ - 1);
    for (std::size_t trial = 0; trial < opts_.budget; ++trial) {
      std::size_t t = pick_t(rng);
      ChannelHistory x1(n_);
      ChannelHistory x2(n_);
      for (std::size_t c = 0; c < channels_.size(); ++c) {
        TimedStream s1(channels_[c].type);
        TimedStream s2(channels_[c].type);
        for (std::size_t k = 0; k < n_; ++k) {
          Message m = sample(c, rng);
          s1.push_back(m);
          s2.push_back(k < t ? m : sample(c, rng));
        }
        x1.bindings.emplace(channels_[c].name, std::move(s1));
        x2.bindings.emplace(channels_[c].name, std::move(s2));
      }
      ChannelHistory y1 = simulate(x1);
      ChannelHistory y2 = simulate(x2);
      if (auto d = first_difference(y1, y2, guarded(t))) {
        report(x1, x2, y1, y2, t, d->first, d->second);
        return;
      }
    }
  }

  Simulator sim_;
  const CausalityOptions& opts_;
  std::size_t n_;
  std::vector<Channel> channels_;
  std::vector<std::vector<Message>> domains_;
  CausalityResult result_;
};

}  // namespace

CausalityResult check_causality(const ComponentSpec& spec, const CausalityOptions& options) {
  return Search(spec, options).run();
}

}  // namespace streamcheck
