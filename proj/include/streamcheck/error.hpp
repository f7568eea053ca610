#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace streamcheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tick or prefix length outside a stream's horizon.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A value that does not belong to the domain of its DataType.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Type errors and arithmetic faults while evaluating an expression.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Malformed component, relation or binding (not a runtime fault).
class SpecError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Enumeration bounds exceeded; carries the caps that would be required.
class RefusalError : public Error {
 public:
  RefusalError(const std::string& what, std::size_t required_elements,
               std::size_t required_horizon)
      : Error(what),
        required_elements_(required_elements),
        required_horizon_(required_horizon) {}

  std::size_t required_elements() const { return required_elements_; }
  std::size_t required_horizon() const { return required_horizon_; }

 private:
  std::size_t required_elements_;
  std::size_t required_horizon_;
};

// Any failure raised while simulating; records the tick it happened at.
class SimulationError : public Error {
 public:
  SimulationError(const std::string& what, std::size_t tick)
      : Error(what), tick_(tick) {}
  std::size_t tick() const { return tick_; }

 private:
  std::size_t tick_;
};

class StuckError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

class NondeterminismError : public SimulationError {
 public:
  using SimulationError::SimulationError;
};

}  // namespace streamcheck
