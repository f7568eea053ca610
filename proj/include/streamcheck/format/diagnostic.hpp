#pragma once

#include <string>
#include <vector>

#include "streamcheck/error.hpp"
#include "streamcheck/model/expr.hpp"

namespace streamcheck {

struct Diagnostic {
  SourceLoc loc;
  std::string message;
  std::string file;  // optional

  // "file:line:column: message"; unknown parts are left out.
  std::string to_string() const;
};

// Carries every diagnostic of a failed parse; what() lists them one per line.
class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace streamcheck
