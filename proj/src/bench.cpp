#include "repeg/bench.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "repeg/peg_match.hpp"
#include "repeg/regex_syntax.hpp"

namespace repeg {

std::vector<BenchRow> run_bench(const std::vector<std::string>& patterns,
                                std::string_view corpus, std::string subject_id,
                                const Alphabet& alphabet, const BenchOptions& opts) {
  if (opts.repetitions < 1) throw std::invalid_argument("bench needs at least one repetition");
  std::vector<BenchRow> rows;
  for (const std::string& pattern : patterns) {
    RegexPtr e = parse_regex(pattern, alphabet);
    std::optional<SearchHit> agreed;
    bool first_mode = true;
    for (SearchMode mode : opts.modes) {
      SearchGrammar sg = build_search_grammar(e, alphabet, mode, opts.compile);
      PegMatcher matcher(sg.grammar);
      MatchOptions mopts;
      mopts.fuel = auto_search_fuel(sg.grammar, corpus.size());

      std::vector<std::chrono::nanoseconds> times;
      times.reserve(opts.repetitions);
      for (int r = 0; r < opts.repetitions; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        MatchOutcome out = matcher.match(corpus, mopts);
        auto t1 = std::chrono::steady_clock::now();
        if (out.out_of_fuel()) throw SearchFuelError();
        times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0));
      }
      std::sort(times.begin(), times.end());

      BenchRow row;
      row.pattern = pattern;
      row.requested = mode;
      row.effective = sg.effective;
      row.subject_id = subject_id;
      row.elapsed = times[times.size() / 2];
      row.hit = search(sg, corpus);
      if (first_mode) {
        agreed = row.hit;
        first_mode = false;
      } else if (row.hit != agreed) {
        throw std::logic_error("bench: search modes disagree on pattern " + pattern);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string generate_corpus(std::uint64_t seed, std::size_t target_bytes,
                            const std::vector<std::string>& planted) {
  std::mt19937_64 rng(seed);
  // fixed vocabulary of lowercase words, lengths 3..11
  std::vector<std::string> vocab;
  vocab.reserve(4096);
  for (int i = 0; i < 4096; ++i) {
    std::size_t len = 3 + rng() % 9;
    std::string w;
    for (std::size_t k = 0; k < len; ++k) w += static_cast<char>('a' + rng() % 26);
    vocab.push_back(std::move(w));
  }

  std::vector<std::size_t> plant_at;
  for (std::size_t i = 0; i < planted.size(); ++i)
    plant_at.push_back(target_bytes * (i + 1) / (planted.size() + 1));

  std::string out;
  out.reserve(target_bytes + 64);
  std::size_t next_plant = 0;
  std::size_t since_newline = 0;
  while (out.size() < target_bytes) {
    out += vocab[rng() % vocab.size()];
    if (next_plant < plant_at.size() && out.size() >= plant_at[next_plant]) {
      out += ' ';
      out += planted[next_plant];
      ++next_plant;
    }
    ++since_newline;
    std::uint64_t sep = rng() % 16;
    if (since_newline >= 14 && sep < 4) {
      out += ".\n";
      since_newline = 0;
    } else if (sep == 4) {
      out += ", ";
    } else {
      out += ' ';
    }
  }
  // plant anything that did not fit
  for (; next_plant < plant_at.size(); ++next_plant) {
    out += planted[next_plant];
    out += ' ';
  }
  out += '\n';
  return out;
}

}  // namespace repeg
