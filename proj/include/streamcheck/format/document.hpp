#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "streamcheck/abstraction/concretizer.hpp"
#include "streamcheck/abstraction/correspondence.hpp"
#include "streamcheck/abstraction/galois.hpp"
#include "streamcheck/abstraction/relation.hpp"
#include "streamcheck/format/diagnostic.hpp"
#include "streamcheck/model/component.hpp"

namespace streamcheck {

// Everything declared in one model file, in declaration order. All
// cross-references are resolved to shared, immutable definitions.
struct ModelDocument {
  std::vector<std::shared_ptr<const EnumDef>> enums;
  std::vector<std::shared_ptr<const ComponentSpec>> components;
  std::vector<std::shared_ptr<const RelationSpec>> relations;
  std::vector<std::shared_ptr<const GaloisSpec>> galois;
  std::vector<std::shared_ptr<const ConcretizerSpec>> concretizers;
  std::vector<std::shared_ptr<const RefinementSpec>> refinements;

  std::shared_ptr<const ComponentSpec> component(std::string_view name) const;
  std::shared_ptr<const RelationSpec> relation(std::string_view name) const;
  std::shared_ptr<const GaloisSpec> galois_spec(std::string_view name) const;
  std::shared_ptr<const ConcretizerSpec> concretizer(std::string_view name) const;
  std::shared_ptr<const RefinementSpec> refinement(std::string_view name) const;

  bool empty() const;

  // Structural: compares the definitions, not the pointers.
  friend bool operator==(const ModelDocument& a, const ModelDocument& b);
};

struct ParseResult {
  ModelDocument document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Never throws; any input yields a document or diagnostics with locations.
// Syntax errors stop the parse at the first one; reference and type errors
// are all reported.
ParseResult parse_model(std::string_view text);

// Throws ParseError when there are diagnostics.
ModelDocument load_model(std::string_view text);
// Throws Error if the file cannot be read, ParseError otherwise.
ModelDocument load_model_file(const std::string& path);

// Canonical text; parse_model(serialize_model(d)).document == d.
std::string serialize_model(const ModelDocument& doc);

}  // namespace streamcheck
