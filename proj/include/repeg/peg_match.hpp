#pragma once

#include <cstdint>
#include <string_view>
#include <unordered_map>

#include "repeg/match_outcome.hpp"
#include "repeg/peg.hpp"

namespace repeg {

inline constexpr std::uint64_t kDefaultPegFuel = 10'000'000;

struct MatchStats {
  std::uint64_t fuel_used = 0;
  std::size_t max_frames = 0;
};

struct MatchOptions {
  std::uint64_t fuel = kDefaultPegFuel;
  // Single-symbol repetitions like [abc]* and (![abc] .)* run as direct
  // scans over the subject instead of one interpreter step per rule.
  bool scan_fast_paths = true;
  MatchStats* stats = nullptr;
};

// Reusable matcher for one grammar; resolves non-terminal references once.
// Matching keeps all its state in locals, so one matcher may run on several
// threads at a time.
class PegMatcher {
 public:
  explicit PegMatcher(const Grammar& g);

  MatchOutcome match(std::string_view input, const MatchOptions& opts = {}) const;

 private:
  const Grammar& g_;
  std::unordered_map<std::string_view, const PegNode*> bodies_;
};

MatchOutcome peg_match(const Grammar& g, std::string_view input, const MatchOptions& opts = {});
MatchOutcome peg_match(const Grammar& g, std::string_view input, std::uint64_t fuel);

// Syntactic completeness: the grammar yields a verdict on every input. The
// analysis runs a fixed point over "can succeed without consuming / can
// succeed consuming / can fail" and rejects left recursion and repetitions
// whose body can succeed empty or can never fail.
bool is_complete(const Grammar& g);

}  // namespace repeg
