#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "streamcheck/core/stream.hpp"
#include "streamcheck/model/component.hpp"
#include "streamcheck/model/expr.hpp"

namespace streamcheck {

// Element-wise abstraction of one concrete channel onto one abstract channel.
//
// `f` maps the concrete value (named `c`) to the abstract value. `g` is the
// membership predicate of the concretization: g(a, c) holds iff concrete
// value `c` is among the concretizations of abstract value `a`.
struct ChannelAbstraction {
  std::string concrete;
  DataType concrete_type = DataType::real();
  std::string abstract;
  DataType abstract_type = DataType::boolean();
  std::optional<Expr> f;  // absent when the Galois spec uses an f component
  Expr g;
  // Value sets spanning the bounded universe used by verify_galois. Channels
  // without a concrete universe do not take part in verification; a missing
  // abstract universe means "every value of the abstract type".
  std::optional<std::vector<Message>> concrete_universe;
  std::optional<std::vector<Message>> abstract_universe;

  friend bool operator==(const ChannelAbstraction&, const ChannelAbstraction&) = default;
};

struct GaloisSpec {
  std::string name;
  std::vector<ChannelAbstraction> channels;
  // Optional component realizing f on whole histories; its interface maps
  // the concrete channels onto the abstract ones.
  std::optional<std::string> f_component;
  std::shared_ptr<const ComponentSpec> f_spec;
  // Length of every history in the bounded universe.
  std::size_t horizon = 1;

  const ChannelAbstraction* by_concrete(const std::string& name) const;
  const ChannelAbstraction* by_abstract(const std::string& name) const;

  friend bool operator==(const GaloisSpec& a, const GaloisSpec& b) {
    return a.name == b.name && a.channels == b.channels && a.f_component == b.f_component &&
           a.horizon == b.horizon;
  }
};

std::vector<SpecIssue> check_galois(const GaloisSpec& gal);

// f applied to every tick of every concrete channel that has an abstraction.
// Throws DomainError if a value leaves the abstract type or declared
// universe, SpecError for channels without an abstraction.
ChannelHistory abstract_output(const GaloisSpec& gal, const ChannelHistory& concrete);

// g membership on histories: every channel pair present in both histories
// satisfies g at every tick. Different horizons are never related.
bool g_member(const GaloisSpec& gal, const ChannelHistory& abstract,
              const ChannelHistory& concrete);

// Weak (zero-delay) component with inputs a_<abstract> and c_<concrete> for
// the given concrete channels and one output `ok` that is true at a tick iff
// f(concrete values) equals the abstract values. Throws UnsupportedError when
// f is only available as a component.
ComponentSpec build_output_checker(const GaloisSpec& gal,
                                   const std::vector<std::string>& concrete_channels);

struct GaloisCaps {
  std::size_t max_elements = 12;  // per side
  std::size_t max_horizon = 3;
};

// Standard: f(Tc) ⊆ Ta  <=>  Tc ⊆ g(Ta), with g(Ta) = {c | ∃a∈Ta. g(a,c)}.
// Literal: f(Tc) ⊆ Ta  <=>  Ta ⊆ g(Tc), with g(Tc) = {a | ∃c∈Tc. g(a,c)}.
enum class GaloisOrientation { Standard, Literal };

struct GaloisUniverse {
  std::vector<ChannelHistory> concrete;
  std::vector<ChannelHistory> abstract;
};

// Enumerates every history of exactly `horizon` ticks over the channels that
// declare a concrete universe. Throws RefusalError when a side exceeds caps.
GaloisUniverse enumerate_universe(const GaloisSpec& gal, const GaloisCaps& caps = {});

struct GaloisCounterexample {
  std::vector<ChannelHistory> concrete_set;
  std::vector<ChannelHistory> abstract_set;
  bool f_subset = false;  // f(Tc) ⊆ Ta
  bool g_subset = false;  // right-hand side of the biconditional
};

struct GaloisResult {
  bool ok = true;
  std::size_t concrete_elements = 0;
  std::size_t abstract_elements = 0;
  std::size_t pairs_checked = 0;
  // First violating pair in (concrete mask, abstract mask) lexicographic order.
  std::optional<GaloisCounterexample> counterexample;
};

// Exhaustive check of the Galois condition over all subset pairs of the
// bounded universes. f is lifted to subsets as a bitmask image.
GaloisResult verify_galois(const GaloisSpec& gal, const GaloisCaps& caps = {},
                           GaloisOrientation orientation = GaloisOrientation::Standard);

}  // namespace streamcheck
