#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "repeg/search.hpp"

namespace repeg {

struct BenchRow {
  std::string pattern;
  SearchMode requested = SearchMode::Naive;
  SearchMode effective = SearchMode::Naive;
  std::string subject_id;
  std::chrono::nanoseconds elapsed{0};  // median over the repetitions
  std::optional<SearchHit> hit;
};

struct BenchOptions {
  std::vector<SearchMode> modes{SearchMode::Naive, SearchMode::FirstSkip};
  int repetitions = 5;
  CompileOptions compile;
};

// Time unanchored search for each pattern under each mode and report the
// median wall-clock duration. All modes must agree on the hit for a given
// pattern; disagreement is a correctness bug and throws.
std::vector<BenchRow> run_bench(const std::vector<std::string>& patterns,
                                std::string_view corpus, std::string subject_id,
                                const Alphabet& alphabet, const BenchOptions& opts = {});

// Deterministic word-salad corpus of roughly `target_bytes` bytes: lowercase
// words with sentence punctuation, plus each planted word inserted once at
// evenly spread offsets (always preceded by a word and a space). Words never
// contain uppercase letters, so a capitalized planted word occurs exactly
// once.
std::string generate_corpus(std::uint64_t seed, std::size_t target_bytes,
                            const std::vector<std::string>& planted = {});

}  // namespace repeg
