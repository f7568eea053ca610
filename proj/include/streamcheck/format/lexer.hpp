#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "streamcheck/format/diagnostic.hpp"

namespace streamcheck {

struct Token {
  enum class Kind { Ident, Int, Real, Symbol, End };

  Kind kind = Kind::End;
  std::string text;
  SourceLoc loc;

  bool is(std::string_view symbol) const {
    return (kind == Kind::Symbol || kind == Kind::Ident) && text == symbol;
  }
};

// Splits model text into tokens. Identifiers may be dotted (`a.i`,
// `sp.Speed`). `#` and `//` start line comments. Bytes that start no token
// are reported and skipped; the result always ends with an End token.
std::vector<Token> tokenize(std::string_view text, std::vector<Diagnostic>& diagnostics);

}  // namespace streamcheck
