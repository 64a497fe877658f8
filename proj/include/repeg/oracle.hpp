#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "repeg/match_outcome.hpp"
#include "repeg/regex_ast.hpp"

namespace repeg {

inline constexpr std::uint64_t kDefaultOracleFuel = 10'000'000;

// Set of prefix lengths a pattern can match against one input, kept as a
// bitmask; reference inputs are short so 63 symbols is plenty.
class PrefixSet {
 public:
  static constexpr std::size_t kMaxInput = 63;

  PrefixSet() = default;
  explicit PrefixSet(std::uint64_t raw) : bits_(raw) {}

  void add(std::size_t n) { bits_ |= std::uint64_t{1} << n; }
  bool contains(std::size_t n) const {
    return n <= kMaxInput && (bits_ >> n) & 1;
  }
  bool empty() const { return bits_ == 0; }
  std::size_t count() const;
  std::uint64_t raw() const { return bits_; }
  std::vector<std::size_t> lengths() const;

  friend bool operator==(const PrefixSet&, const PrefixSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Every prefix length the expression can match, by exhaustive memoized
// exploration of the non-deterministic matching relation. Repetition steps
// must consume input, which keeps the exploration finite even for patterns
// with nullable repetition bodies. Rejects extension nodes.
PrefixSet match_prefixes(const RegexPtr& e, std::string_view input);

// The prefix a Perl-style engine matches: alternatives tried left to right
// with unrestricted backtracking, greedy repetition, shortest-first lazy
// repetition, atomic groups that commit to their first match, and zero-width
// lookaheads. Runs out of fuel on patterns that loop on empty matches.
MatchOutcome backtrack_match(const RegexPtr& e, std::string_view input,
                             std::uint64_t fuel = kDefaultOracleFuel);

}  // namespace repeg
