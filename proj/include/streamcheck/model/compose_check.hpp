#pragma once

#include <string>
#include <vector>

#include "streamcheck/model/component.hpp"

namespace streamcheck {

struct CompositionViolation {
  enum class Kind {
    UnknownEndpoint,      // connector names a missing instance or port
    WrongDirection,       // producer is not an output/composite input, or vice versa
    UnconnectedConsumer,  // consumer end without a producer
    MultipleProducers,    // consumer end driven twice
    TypeMismatch,         // connected ends with different DataTypes
    ZeroDelayCycle,       // wiring cycle through weak components only
    InterfaceClash,       // duplicate or overlapping channel names
    UnresolvedComponent,  // subcomponent without a definition
    InvalidSubcomponent,  // a nested automaton or composite is malformed
  };
  Kind kind;
  std::string message;
  // For ZeroDelayCycle: the channel path of the cycle ("a.out -> b.in -> ...").
  std::vector<std::string> path;
};

std::string to_string(CompositionViolation::Kind kind);

// Checks a composite (and, recursively, its nested composites and automata)
// against the composition rules. Empty result means ok.
std::vector<CompositionViolation> compose_check(const CompositeSpec& spec);

}  // namespace streamcheck
