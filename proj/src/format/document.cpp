#include "streamcheck/format/document.hpp"

#include <fstream>
#include <sstream>

namespace streamcheck {

namespace {

template <typename T, typename Name>
std::shared_ptr<const T> find_named(const std::vector<std::shared_ptr<const T>>& v,
                                    std::string_view name, Name get) {
  for (const auto& x : v) {
    if (get(*x) == name) return x;
  }
  return nullptr;
}

template <typename T>
bool deep_equal(const std::vector<std::shared_ptr<const T>>& a,
                const std::vector<std::shared_ptr<const T>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(*a[i] == *b[i])) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const ComponentSpec> ModelDocument::component(std::string_view name) const {
  return find_named(components, name, [](const ComponentSpec& c) { return c.name(); });
}

std::shared_ptr<const RelationSpec> ModelDocument::relation(std::string_view name) const {
  return find_named(relations, name, [](const RelationSpec& r) { return r.name; });
}

std::shared_ptr<const GaloisSpec> ModelDocument::galois_spec(std::string_view name) const {
  return find_named(galois, name, [](const GaloisSpec& g) { return g.name; });
}

std::shared_ptr<const ConcretizerSpec> ModelDocument::concretizer(std::string_view name) const {
  return find_named(concretizers, name, [](const ConcretizerSpec& c) { return c.name; });
}

std::shared_ptr<const RefinementSpec> ModelDocument::refinement(std::string_view name) const {
  return find_named(refinements, name, [](const RefinementSpec& r) { return r.name; });
}

bool ModelDocument::empty() const {
  return enums.empty() && components.empty() && relations.empty() && galois.empty() &&
         concretizers.empty() && refinements.empty();
}

bool operator==(const ModelDocument& a, const ModelDocument& b) {
  return deep_equal(a.enums, b.enums) && deep_equal(a.components, b.components) &&
         deep_equal(a.relations, b.relations) && deep_equal(a.galois, b.galois) &&
         deep_equal(a.concretizers, b.concretizers) && deep_equal(a.refinements, b.refinements);
}

ModelDocument load_model(std::string_view text) {
  ParseResult r = parse_model(text);
  if (!r.ok()) throw ParseError(std::move(r.diagnostics));
  return std::move(r.document);
}

ModelDocument load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  ParseResult r = parse_model(ss.str());
  if (!r.ok()) {
    for (auto& d : r.diagnostics) d.file = path;
    throw ParseError(std::move(r.diagnostics));
  }
  return std::move(r.document);
}

}  // namespace streamcheck
