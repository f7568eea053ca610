#pragma once

#include <string>
#include <vector>

namespace streamcheck {

// Candidate within edit distance 2 of `word` (closest first, ties by order),
// or an empty string.
std::string closest_match(const std::string& word, const std::vector<std::string>& candidates);

}  // namespace streamcheck
