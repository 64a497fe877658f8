#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "repeg/bench.hpp"
#include "repeg/equivalence.hpp"
#include "repeg/oracle.hpp"
#include "repeg/peg_match.hpp"
#include "repeg/peg_syntax.hpp"
#include "repeg/regex_syntax.hpp"
#include "repeg/rewrite.hpp"
#include "repeg/search.hpp"
#include "repeg/transform.hpp"

using nlohmann::json;
using namespace repeg;

namespace {

// 0 success / match found, 1 no match, 2 usage error, 3 equivalence
// violations found
constexpr int kExitMatch = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolations = 3;

Alphabet alphabet_from_flag(const std::string& flag) {
  if (flag.empty()) return Alphabet::all_bytes();
  return Alphabet::of(flag);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

struct LineCol {
  std::size_t line;
  std::size_t col;
};

LineCol line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json hit_json(const std::string& pattern, std::string_view mode,
              const std::optional<SearchHit>& hit) {
  json j{{"pattern", pattern}, {"mode", mode}};
  if (hit) {
    j["start"] = hit->start;
    j["end"] = hit->end;
  } else {
    j["start"] = nullptr;
    j["end"] = nullptr;
  }
  return j;
}

int cmd_compile(const std::string& pattern, const std::string& alpha_flag, bool no_rewrite,
                bool no_opt, bool show_rewrite) {
  Alphabet alpha = alphabet_from_flag(alpha_flag);
  RegexPtr e = parse_regex(pattern, alpha);
  if (show_rewrite) std::cout << "rewritten: " << print_regex(make_well_formed(e), alpha) << "\n";
  CompileOptions opts;
  opts.rewrite = !no_rewrite;
  opts.optimize_repetition = !no_opt;
  Grammar g = compile(e, alpha, opts);
  std::cout << grammar_to_text(g);
  return kExitMatch;
}

int cmd_match(const std::string& pattern, const std::string& subject,
              const std::string& alpha_flag, bool no_rewrite, bool no_opt, std::uint64_t fuel,
              bool as_json) {
  Alphabet alpha = alphabet_from_flag(alpha_flag);
  RegexPtr e = parse_regex(pattern, alpha);
  CompileOptions opts;
  opts.rewrite = !no_rewrite;
  opts.optimize_repetition = !no_opt;
  Grammar g = compile(e, alpha, opts);
  MatchOutcome out = peg_match(g, subject, fuel);
  if (as_json) {
    json j{{"pattern", pattern}, {"outcome", out.to_string()}};
    if (out.is_match()) j["consumed"] = out.consumed;
    std::cout << j.dump() << "\n";
  } else if (out.is_match()) {
    std::cout << "matched prefix of " << out.consumed << " of " << subject.size()
              << " symbols\n";
  } else {
    std::cout << out.to_string() << "\n";
  }
  if (out.out_of_fuel()) return kExitUsage;
  return out.is_match() ? kExitMatch : kExitNoMatch;
}

int cmd_search(const std::string& pattern, const std::string& path, const std::string& mode_flag,
               const std::string& alpha_flag, std::uint64_t fuel, bool as_json) {
  Alphabet alpha = alphabet_from_flag(alpha_flag);
  RegexPtr e = parse_regex(pattern, alpha);
  std::string subject = read_file(path);

  SearchGrammar sg;
  if (mode_flag == "auto") {
    sg = build_search_grammar(e, alpha, strongest_search_mode(e), {});
  } else {
    auto mode = search_mode_from_string(mode_flag);
    if (!mode) {
      std::cerr << "unknown mode: " << mode_flag << "\n";
      return kExitUsage;
    }
    sg = build_search_grammar(e, alpha, *mode, {});
  }

  auto t0 = std::chrono::steady_clock::now();
  std::optional<SearchHit> hit = search(sg, subject, fuel);
  auto elapsed = std::chrono::steady_clock::now() - t0;

  if (as_json) {
    json j = hit_json(pattern, to_string(sg.effective), hit);
    j["elapsed_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
    std::cout << j.dump() << "\n";
    return hit ? kExitMatch : kExitNoMatch;
  }
  if (!hit) {
    std::cout << "no match (" << to_string(sg.effective) << " mode)\n";
    return kExitNoMatch;
  }
  LineCol lc = line_col(subject, hit->start);
  std::cout << lc.line << ":" << lc.col << ": bytes " << hit->start << ".." << hit->end << " ("
            << to_string(sg.effective) << " mode)\n";
  return kExitMatch;
}

void print_report(const EquivReport& r, bool as_json) {
  if (as_json) {
    json v = json::array();
    for (const auto& viol : r.violations)
      v.push_back({{"input", viol.input},
                   {"kind", std::string(to_string(viol.kind))},
                   {"peg", viol.peg.to_string()},
                   {"evidence", viol.evidence}});
    json j{{"pattern", r.pattern},
           {"tested_inputs", r.tested_inputs},
           {"oracle_skipped", r.oracle_skipped},
           {"violations", v}};
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << r.pattern << ": " << r.tested_inputs << " inputs, " << r.violations.size()
            << " violations, " << r.oracle_skipped << " skipped\n";
  for (const auto& viol : r.violations)
    std::cout << "  input '" << viol.input << "': " << to_string(viol.kind)
              << " (grammar " << viol.peg.to_string() << "; " << viol.evidence << ")\n";
}

int cmd_equiv(const std::string& pattern, std::size_t fuzz_count, const std::string& alpha_flag,
              std::size_t maxlen, std::uint64_t seed, bool extensions, bool direct,
              unsigned threads, bool as_json) {
  Alphabet alpha = alphabet_from_flag(alpha_flag.empty() ? "ab" : alpha_flag);
  if (fuzz_count > 0) {
    FuzzOptions fo;
    fo.seed = seed;
    fo.count = fuzz_count;
    fo.extensions = extensions;
    fo.require_extension = extensions;
    fo.require_well_formed = true;
    fo.max_len = maxlen;
    fo.threads = threads;
    fo.equiv.direct_peg = direct;
    FuzzSummary s = fuzz_equivalence(alpha, fo);
    if (as_json) {
      json j{{"tested", s.tested},
             {"total_inputs", s.total_inputs},
             {"violations", s.violations},
             {"oracle_skipped", s.oracle_skipped}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << s.tested << " patterns, " << s.total_inputs << " inputs, " << s.violations
                << " violations, " << s.oracle_skipped << " oracle runs skipped\n";
    }
    for (const auto& r : s.failing) print_report(r, as_json);
    return s.violations == 0 ? kExitMatch : kExitViolations;
  }
  RegexPtr e = parse_regex(pattern, alpha);
  EquivOptions eo;
  eo.max_len = maxlen;
  eo.direct_peg = direct;
  EquivReport r = check_equivalence(e, alpha, eo);
  print_report(r, as_json);
  return r.clean() ? kExitMatch : kExitViolations;
}

int cmd_bench(const std::string& patterns_path, const std::string& corpus_path,
              const std::vector<std::string>& mode_flags, int reps, bool as_json) {
  std::vector<std::string> patterns;
  {
    std::istringstream lines(read_file(patterns_path));
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty()) patterns.push_back(line);
  }
  std::string corpus = read_file(corpus_path);

  BenchOptions bo;
  bo.repetitions = reps;
  bo.modes.clear();
  for (const auto& f : mode_flags) {
    auto m = search_mode_from_string(f);
    if (!m) {
      std::cerr << "unknown mode: " << f << "\n";
      return kExitUsage;
    }
    bo.modes.push_back(*m);
  }
  if (bo.modes.empty()) bo.modes = {SearchMode::Naive, SearchMode::FirstSkip};

  auto rows = run_bench(patterns, corpus, corpus_path, Alphabet::all_bytes(), bo);
  for (const auto& row : rows) {
    if (as_json) {
      json j = hit_json(row.pattern, to_string(row.effective), row.hit);
      j["elapsed_ns"] = row.elapsed.count();
      j["subject"] = row.subject_id;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << row.pattern << "\t" << to_string(row.requested);
      if (row.effective != row.requested)
        std::cout << " (ran as " << to_string(row.effective) << ")";
      std::cout << "\t" << row.elapsed.count() / 1000000.0 << " ms\t";
      if (row.hit)
        std::cout << "hit " << row.hit->start << ".." << row.hit->end << "\n";
      else
        std::cout << "no match\n";
    }
  }
  return kExitMatch;
}

int cmd_corpus(const std::string& out_path, std::size_t bytes, std::uint64_t seed,
               const std::vector<std::string>& planted) {
  std::string corpus = generate_corpus(seed, bytes, planted);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + out_path);
  out << corpus;
  std::cout << "wrote " << corpus.size() << " bytes to " << out_path << "\n";
  return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repeg: compile patterns to parsing expression grammars, match, search, verify"};
  app.require_subcommand(1);

  std::string pattern, subject, path, alpha_flag, mode = "auto";
  bool no_rewrite = false, no_opt = false, show_rewrite = false, as_json = false;
  bool extensions = false, direct = false;
  std::uint64_t fuel = 0, seed = 1;
  std::size_t maxlen = 6, fuzz_count = 0, bytes = 4 * 1024 * 1024;
  unsigned threads = 0;
  int reps = 5;
  std::vector<std::string> mode_flags, planted;

  auto* compile_cmd = app.add_subcommand("compile", "translate a pattern and print the grammar");
  compile_cmd->add_option("pattern", pattern)->required();
  compile_cmd->add_flag("--no-rewrite", no_rewrite, "skip the well-formedness rewriting");
  compile_cmd->add_flag("--no-opt", no_opt, "skip the repetition optimization");
  compile_cmd->add_flag("--show-rewrite", show_rewrite, "print the rewritten pattern first");
  compile_cmd->add_option("--alphabet", alpha_flag, "restrict the alphabet to these symbols");

  auto* match_cmd = app.add_subcommand("match", "match a pattern against a string");
  match_cmd->add_option("pattern", pattern)->required();
  match_cmd->add_option("subject", subject)->required();
  match_cmd->add_flag("--no-rewrite", no_rewrite);
  match_cmd->add_flag("--no-opt", no_opt);
  match_cmd->add_option("--fuel", fuel, "step budget (default 10^7)");
  match_cmd->add_option("--alphabet", alpha_flag);
  match_cmd->add_flag("--json", as_json);

  auto* search_cmd = app.add_subcommand("search", "find the first match in a file");
  search_cmd->add_option("pattern", pattern)->required();
  search_cmd->add_option("file", path)->required();
  search_cmd->add_option("--mode", mode, "naive|first|combined|combined-disjoint|auto");
  search_cmd->add_option("--fuel", fuel);
  search_cmd->add_option("--alphabet", alpha_flag);
  search_cmd->add_flag("--json", as_json);

  auto* equiv_cmd =
      app.add_subcommand("equiv", "check a pattern (or a fuzz campaign) against the references");
  equiv_cmd->add_option("pattern", pattern);
  equiv_cmd->add_option("--fuzz", fuzz_count, "number of generated patterns");
  equiv_cmd->add_option("--alphabet", alpha_flag, "default ab");
  equiv_cmd->add_option("--maxlen", maxlen, "test all inputs up to this length (default 6)");
  equiv_cmd->add_option("--seed", seed);
  equiv_cmd->add_flag("--ext", extensions, "generate extension-bearing patterns");
  equiv_cmd->add_flag("--direct", direct, "read the pattern as a grammar without translating");
  equiv_cmd->add_option("--threads", threads);
  equiv_cmd->add_flag("--json", as_json);

  auto* bench_cmd = app.add_subcommand("bench", "time unanchored search per mode");
  bench_cmd->add_option("--patterns", path, "file with one pattern per line")->required();
  std::string corpus_path;
  bench_cmd->add_option("--corpus", corpus_path, "subject file")->required();
  bench_cmd->add_option("--modes", mode_flags, "modes to compare");
  bench_cmd->add_option("--reps", reps, "repetitions per measurement (default 5)");
  bench_cmd->add_flag("--json", as_json);

  auto* corpus_cmd = app.add_subcommand("corpus", "write a deterministic synthetic corpus");
  std::string out_path = "corpus.txt";
  corpus_cmd->add_option("--out", out_path);
  corpus_cmd->add_option("--bytes", bytes);
  corpus_cmd->add_option("--seed", seed);
  corpus_cmd->add_option("--plant", planted, "words to insert once each");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile_cmd->parsed())
      return cmd_compile(pattern, alpha_flag, no_rewrite, no_opt, show_rewrite);
    if (match_cmd->parsed())
      return cmd_match(pattern, subject, alpha_flag, no_rewrite, no_opt,
                       fuel ? fuel : kDefaultPegFuel, as_json);
    if (search_cmd->parsed()) return cmd_search(pattern, path, mode, alpha_flag, fuel, as_json);
    if (equiv_cmd->parsed()) {
      if (pattern.empty() && fuzz_count == 0) {
        std::cerr << "equiv needs a pattern or --fuzz N\n";
        return kExitUsage;
      }
      return cmd_equiv(pattern, fuzz_count, alpha_flag, maxlen, seed, extensions, direct,
                       threads, as_json);
    }
    if (bench_cmd->parsed()) return cmd_bench(path, corpus_path, mode_flags, reps, as_json);
    if (corpus_cmd->parsed()) return cmd_corpus(out_path, bytes, seed, planted);
  } catch (const RegexSyntaxError& e) {
    std::cerr << "pattern error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GrammarSyntaxError& e) {
    std::cerr << "grammar error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotWellFormedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
