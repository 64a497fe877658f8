#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repeg/match_outcome.hpp"
#include "repeg/oracle.hpp"
#include "repeg/peg.hpp"
#include "repeg/peg_match.hpp"
#include "repeg/regex_ast.hpp"

namespace repeg {

enum class ViolationKind : std::uint8_t {
  PegMatchesNonPrefix,  // the grammar matched a prefix the pattern cannot
  PegFailsOnMatch,      // the grammar failed although the pattern matches
  OrderingMismatch,     // grammar and backtracking engine picked different prefixes
};

std::string_view to_string(ViolationKind k);

struct Violation {
  std::string input;
  ViolationKind kind;
  MatchOutcome peg;
  std::string evidence;
};

struct EquivReport {
  std::string pattern;
  std::size_t tested_inputs = 0;
  std::size_t oracle_skipped = 0;  // reference runs that hit the fuel limit
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
};

struct EquivOptions {
  std::size_t max_len = 6;
  bool direct_peg = false;  // read the pattern as a grammar with no translation
  std::uint64_t oracle_fuel = kDefaultOracleFuel;
  std::uint64_t peg_fuel = kDefaultPegFuel;
};

// Read an extension-free pattern tree as a parsing expression, one node for
// one node. Choice becomes ordered choice and repetition possessive, which
// is exactly the semantic gap the translation exists to close.
PegPtr regex_as_peg(const RegexPtr& e);

// Enumerate all strings over the alphabet up to max_len.
std::vector<std::string> all_strings(const Alphabet& alphabet, std::size_t max_len);

// Compare the compiled grammar against the reference semantics on every
// input up to max_len: the grammar must match only prefixes the pattern can
// match, must not fail when the pattern matches (extension-free patterns
// only), and must pick the same prefix as the backtracking engine. Budget
// guard: alphabet of at most 4 symbols, max_len at most 10.
EquivReport check_equivalence(const RegexPtr& e, const Alphabet& alphabet,
                              const EquivOptions& opts = {});

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  int depth = 6;
  bool extensions = false;
  bool require_well_formed = true;
  bool require_extension = false;
  std::size_t max_len = 6;
  unsigned threads = 0;  // 0 = hardware concurrency
  EquivOptions equiv;
};

struct FuzzSummary {
  std::size_t tested = 0;
  std::size_t total_inputs = 0;
  std::size_t violations = 0;
  std::size_t oracle_skipped = 0;
  std::vector<EquivReport> failing;  // capped at 16 reports
};

// Generate patterns from consecutive seeds, filter per the options, and run
// check_equivalence on each; campaigns fan out over worker threads.
FuzzSummary fuzz_equivalence(const Alphabet& alphabet, const FuzzOptions& opts);

}  // namespace repeg
