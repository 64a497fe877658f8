#include "repeg/equivalence.hpp"

#include <future>
#include <stdexcept>
#include <thread>

#include "repeg/generate.hpp"
#include "repeg/regex_syntax.hpp"
#include "repeg/transform.hpp"

namespace repeg {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::PegMatchesNonPrefix:
      return "peg-matches-non-prefix";
    case ViolationKind::PegFailsOnMatch:
      return "peg-fails-on-match";
    case ViolationKind::OrderingMismatch:
      return "ordering-mismatch";
  }
  return "?";
}

PegPtr regex_as_peg(const RegexPtr& e) {
  switch (e->kind) {
    case RegexKind::Empty:
      return pe::empty();
    case RegexKind::Class:
      return pe::cls(e->cls);
    case RegexKind::Concat:
      return pe::concat_raw(regex_as_peg(e->left), regex_as_peg(e->right));
    case RegexKind::Choice:
      return pe::choice(regex_as_peg(e->left), regex_as_peg(e->right));
    case RegexKind::Star:
      return pe::star(regex_as_peg(e->left));
    default:
      throw std::invalid_argument("regex_as_peg: extension nodes have no direct reading");
  }
}

std::vector<std::string> all_strings(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<unsigned char> syms = alphabet.symbols.symbols();
  std::vector<std::string> out;
  std::vector<std::string> frontier{""};
  out.push_back("");
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    next.reserve(frontier.size() * syms.size());
    for (const std::string& base : frontier)
      for (unsigned char c : syms) {
        next.push_back(base + static_cast<char>(c));
        out.push_back(next.back());
      }
    frontier = std::move(next);
  }
  return out;
}

EquivReport check_equivalence(const RegexPtr& e, const Alphabet& alphabet,
                              const EquivOptions& opts) {
  if (alphabet.size() > 4 || opts.max_len > 10)
    throw std::invalid_argument(
        "equivalence checking is exhaustive; keep the alphabet to 4 symbols and "
        "inputs to length 10");

  EquivReport report;
  report.pattern = print_regex(e, alphabet);

  bool extension_free = !has_extension(e);
  Grammar g;
  if (opts.direct_peg) {
    g.alphabet = alphabet;
    g.start = regex_as_peg(e);
  } else {
    g = compile(e, alphabet);
  }
  PegMatcher matcher(g);
  MatchOptions mopts;
  mopts.fuel = opts.peg_fuel;

  for (const std::string& input : all_strings(alphabet, opts.max_len)) {
    ++report.tested_inputs;
    MatchOutcome peg = matcher.match(input, mopts);
    if (peg.out_of_fuel()) {
      // only reachable through the direct reading of a non-well-formed
      // pattern; the translated grammar is complete
      ++report.oracle_skipped;
      continue;
    }
    if (extension_free) {
      PrefixSet prefixes = match_prefixes(e, input);
      if (peg.is_match() && !prefixes.contains(peg.consumed)) {
        report.violations.push_back({input, ViolationKind::PegMatchesNonPrefix, peg,
                                     "pattern cannot match this prefix"});
      }
      if (peg.is_fail() && !prefixes.empty()) {
        report.violations.push_back({input, ViolationKind::PegFailsOnMatch, peg,
                                     "pattern matches a prefix of this input"});
      }
    }
    MatchOutcome engine = backtrack_match(e, input, opts.oracle_fuel);
    if (engine.out_of_fuel()) {
      ++report.oracle_skipped;
      continue;
    }
    if (!(engine == peg)) {
      report.violations.push_back({input, ViolationKind::OrderingMismatch, peg,
                                   "backtracking engine: " + engine.to_string()});
    }
  }
  return report;
}

namespace {

struct ChunkResult {
  std::size_t inputs = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  std::vector<EquivReport> failing;
};

}  // namespace

FuzzSummary fuzz_equivalence(const Alphabet& alphabet, const FuzzOptions& opts) {
  // fix the population first so results do not depend on thread scheduling
  std::vector<RegexPtr> picks;
  picks.reserve(opts.count);
  for (std::uint64_t i = 0; picks.size() < opts.count; ++i) {
    if (i > opts.count * 1000 + 100000)
      throw std::runtime_error("fuzz_equivalence: generator filter accepts too few patterns");
    RegexPtr e = random_regex(opts.seed + i, opts.depth, alphabet, opts.extensions);
    if (opts.require_well_formed && !is_well_formed(e)) continue;
    if (opts.require_extension && !has_extension(e)) continue;
    picks.push_back(std::move(e));
  }

  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (threads > picks.size() && !picks.empty()) threads = static_cast<unsigned>(picks.size());

  EquivOptions eopts = opts.equiv;
  eopts.max_len = opts.max_len;

  auto run_chunk = [&](std::size_t begin, std::size_t end) {
    ChunkResult r;
    for (std::size_t i = begin; i < end; ++i) {
      EquivReport rep = check_equivalence(picks[i], alphabet, eopts);
      r.inputs += rep.tested_inputs;
      r.skipped += rep.oracle_skipped;
      r.violations += rep.violations.size();
      if (!rep.clean() && r.failing.size() < 16) r.failing.push_back(std::move(rep));
    }
    return r;
  };

  std::vector<std::future<ChunkResult>> futures;
  std::size_t chunk = picks.empty() ? 0 : (picks.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads && chunk; ++t) {
    std::size_t begin = t * chunk;
    std::size_t end = std::min(picks.size(), begin + chunk);
    if (begin >= end) break;
    futures.push_back(std::async(std::launch::async, run_chunk, begin, end));
  }

  FuzzSummary summary;
  summary.tested = picks.size();
  for (auto& f : futures) {
    ChunkResult r = f.get();
    summary.total_inputs += r.inputs;
    summary.violations += r.violations;
    summary.oracle_skipped += r.skipped;
    for (auto& rep : r.failing)
      if (summary.failing.size() < 16) summary.failing.push_back(std::move(rep));
  }
  return summary;
}

}  // namespace repeg
