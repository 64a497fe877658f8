#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "repeg/peg.hpp"
#include "repeg/transform.hpp"

namespace repeg {

enum class SearchMode : std::uint8_t {
  Naive,             // S <- p / . S
  FirstSkip,         // S <- (![F] .)* (p / . S)
  Combined,          // S <- (![F] .)* (p / p1* S)
  CombinedDisjoint,  // S <- (![F] .)* p1* (p2 / S), or p1 p1* for `p1+ p2`
};

std::string_view to_string(SearchMode m);
std::optional<SearchMode> search_mode_from_string(std::string_view s);

struct SearchHit {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// A pattern prepared for unanchored search. `effective` records the mode the
// builder actually used when the requested one did not apply.
struct SearchGrammar {
  Grammar grammar;   // the search wrapper
  Grammar anchored;  // the pattern alone, for locating the hit start
  SearchMode requested = SearchMode::Naive;
  SearchMode effective = SearchMode::Naive;
  CharSet first;
  bool nullable = false;
};

struct SearchFuelError : std::runtime_error {
  SearchFuelError() : std::runtime_error("search ran out of fuel") {}
};

// Build the search wrapper for a pattern. Modes needing more structure than
// the pattern has fall back to the strongest weaker mode: FirstSkip needs a
// pattern that cannot match empty, the combined modes additionally need the
// shape e1* e2 or e1 e1* e2 with single-symbol e1, and the disjoint variant
// needs FIRST(e1) and FIRST(e2) disjoint.
SearchGrammar build_search_grammar(const RegexPtr& e, const Alphabet& alphabet, SearchMode mode,
                                   const CompileOptions& copts = {});

// The strongest mode build_search_grammar would keep for this pattern.
SearchMode strongest_search_mode(const RegexPtr& e, const CompileOptions& copts = {});

std::uint64_t auto_search_fuel(const Grammar& g, std::size_t subject_len);

// Leftmost hit, or nothing. Fuel 0 picks a budget from the grammar and
// subject sizes; running out raises SearchFuelError.
std::optional<SearchHit> search(const SearchGrammar& sg, std::string_view subject,
                                std::uint64_t fuel = 0);

}  // namespace repeg
