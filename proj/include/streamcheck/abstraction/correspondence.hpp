#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "streamcheck/abstraction/concretizer.hpp"
#include "streamcheck/abstraction/galois.hpp"
#include "streamcheck/abstraction/relation.hpp"
#include "streamcheck/model/simulator.hpp"

namespace streamcheck {

// Named pairing of an abstract and a concrete component with their RI/RO
// relations and optionally a concretizer and a Galois spec.
struct RefinementSpec {
  std::string name;
  std::string abstract_name;
  std::string concrete_name;
  std::string ri_name;
  std::string ro_name;
  std::optional<std::string> concretizer_name;
  std::optional<std::string> galois_name;

  std::shared_ptr<const ComponentSpec> abstract;
  std::shared_ptr<const ComponentSpec> concrete;
  std::shared_ptr<const RelationSpec> ri;
  std::shared_ptr<const RelationSpec> ro;
  std::shared_ptr<const ConcretizerSpec> concretizer;
  std::shared_ptr<const GaloisSpec> galois;

  friend bool operator==(const RefinementSpec& a, const RefinementSpec& b) {
    return a.name == b.name && a.abstract_name == b.abstract_name &&
           a.concrete_name == b.concrete_name && a.ri_name == b.ri_name &&
           a.ro_name == b.ro_name && a.concretizer_name == b.concretizer_name &&
           a.galois_name == b.galois_name;
  }
};

struct CorrespondenceResult {
  enum class Status { Corresponding, NotCorresponding, Error };

  Status status = Status::Error;
  bool ri_holds = false;
  bool ro_holds = false;
  bool corresponding = false;  // !ri_holds || ro_holds; meaningless on Error
  TimedStream ri_per_tick{DataType::boolean()};
  TimedStream ro_per_tick{DataType::boolean()};  // checker witness
  ChannelHistory abstract_output;
  ChannelHistory concrete_output;
  std::vector<std::string> diagnostics;
};

std::string to_string(CorrespondenceResult::Status s);

struct CorrespondenceOptions {
  SimOptions abstract_sim;
  SimOptions concrete_sim;
};

// Evaluates RI on the inputs, runs both components and evaluates RO on their
// outputs. Simulation and relation errors yield status Error with the cause
// in the diagnostics.
CorrespondenceResult check_correspondence(const ComponentSpec& spec_a, const ComponentSpec& spec_c,
                                          const RelationSpec& ri, const RelationSpec& ro,
                                          const ChannelHistory& ta, const ChannelHistory& tc,
                                          const CorrespondenceOptions& options = {});

// RO(a, c) := f(c) = a per tick, over the outputs of the two components that
// the Galois spec relates. Throws UnsupportedError for non-element-wise f.
RelationSpec derive_output_relation(const GaloisSpec& gal, const ComponentSpec& spec_a,
                                    const ComponentSpec& spec_c);

// Same relation in checker form, backed by build_output_checker.
RelationSpec output_checker_relation(const GaloisSpec& gal, const ComponentSpec& spec_a,
                                     const ComponentSpec& spec_c);

}  // namespace streamcheck
