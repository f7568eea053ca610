#include "streamcheck/format/lexer.hpp"

#include <array>
#include <cctype>

namespace streamcheck {

std::string Diagnostic::to_string() const {
  std::string where = file.empty() ? "" : file + ":";
  if (loc.line != 0) where += std::to_string(loc.line) + ":" + std::to_string(loc.column) + ":";
  return where.empty() ? message : where + " " + message;
}

namespace {

std::string join(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += "\n";
    out += d.to_string();
  }
  return out;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

constexpr std::array<std::string_view, 8> kTwoChar = {":=", "->", "==", "!=",
                                                      "<=", ">=", "&&", "||"};
constexpr std::string_view kOneChar = "{}()[],;:+-*/!<>=~";

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<Token> tokenize(std::string_view text, std::vector<Diagnostic>& diagnostics) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t line_start = 0;
  auto loc = [&](std::size_t at) { return SourceLoc{line, at - line_start + 1}; };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#' || text.substr(i, 2) == "//") {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      while (i + 1 < text.size() && text[i] == '.' && ident_start(text[i + 1])) {
        ++i;
        while (i < text.size() && ident_char(text[i])) ++i;
      }
      out.push_back({Token::Kind::Ident, std::string(text.substr(start, i - start)), loc(start)});
      continue;
    }
    if (digit(c)) {
      bool real = false;
      while (i < text.size() && digit(text[i])) ++i;
      if (i + 1 < text.size() && text[i] == '.' && digit(text[i + 1])) {
        real = true;
        ++i;
        while (i < text.size() && digit(text[i])) ++i;
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < text.size() && digit(text[j])) {
          real = true;
          i = j;
          while (i < text.size() && digit(text[i])) ++i;
        }
      }
      out.push_back({real ? Token::Kind::Real : Token::Kind::Int,
                     std::string(text.substr(start, i - start)), loc(start)});
      continue;
    }
    bool matched = false;
    for (auto sym : kTwoChar) {
      if (text.substr(i, 2) == sym) {
        out.push_back({Token::Kind::Symbol, std::string(sym), loc(start)});
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (kOneChar.find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), loc(start)});
      ++i;
      continue;
    }
    unsigned char u = static_cast<unsigned char>(c);
    std::string shown = std::isprint(u) ? std::string("'") + c + "'" : "byte " + std::to_string(u);
    diagnostics.push_back({loc(start), "unexpected character " + shown, {}});
    ++i;
  }
  out.push_back({Token::Kind::End, "", loc(i)});
  return out;
}

}  // namespace streamcheck
