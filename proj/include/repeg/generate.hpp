#pragma once

#include <cstdint>

#include "repeg/regex_ast.hpp"

namespace repeg {

// Deterministic pseudo-random pattern: a fixed seed always yields the same
// tree. Constructor weights: leaf 40%, concat 20%, choice 20%, star 10%,
// extensions 10% when enabled (renormalized otherwise); leaves are uniform
// over the alphabet plus ε. Depth 0 forces a leaf.
RegexPtr random_regex(std::uint64_t seed, int max_depth, const Alphabet& alphabet,
                      bool extensions);

}  // namespace repeg
