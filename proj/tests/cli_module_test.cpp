#include <doctest.h>

#include <cctype>

#include "repeg/bench.hpp"
#include "repeg/equivalence.hpp"
#include "repeg/generate.hpp"
#include "repeg/regex_syntax.hpp"
#include "support.hpp"

using namespace repeg;

namespace {

const Alphabet kAB = Alphabet::of("ab");

}  // namespace

TEST_CASE("generator is deterministic and depth-bounded") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RegexPtr a = random_regex(seed, 6, kAB, true);
    RegexPtr b = random_regex(seed, 6, kAB, true);
    CHECK(structurally_equal(a, b));
    RegexPtr leaf = random_regex(seed, 0, kAB, true);
    CHECK((leaf->kind == RegexKind::Empty || leaf->kind == RegexKind::Class));
  }
}

TEST_CASE("generator population statistics are pinned") {
  // frozen counts over seeds 0..999 at depth 6; the rewrite machinery gets a
  // third of the population
  int non_wf = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    if (!is_well_formed(random_regex(seed, 6, kAB, false))) ++non_wf;
  CHECK(non_wf == 333);

  int with_ext = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    if (has_extension(random_regex(seed, 6, kAB, true))) ++with_ext;
  CHECK(with_ext == 372);
}

TEST_CASE("the distributed marker pattern is equivalent, the direct reading is not") {
  Alphabet abm = Alphabet::of("abm");
  RegexPtr e = parse_regex("(a|ab)m", abm);
  EquivOptions direct;
  direct.direct_peg = true;
  direct.max_len = 4;
  EquivReport r = check_equivalence(e, abm, direct);
  REQUIRE_FALSE(r.clean());
  bool saw_fail_on_match = false;
  for (const auto& v : r.violations)
    if (v.kind == ViolationKind::PegFailsOnMatch && v.input.substr(0, 3) == "abm")
      saw_fail_on_match = true;
  CHECK(saw_fail_on_match);

  EquivOptions translated;
  translated.max_len = 4;
  CHECK(check_equivalence(e, abm, translated).clean());
}

TEST_CASE("prefix-free orderings read directly as a grammar stay equivalent") {
  Alphabet abm = Alphabet::of("ab");
  RegexPtr e = parse_regex("ab|aab", abm);
  EquivOptions direct;
  direct.direct_peg = true;
  direct.max_len = 5;
  CHECK(check_equivalence(e, abm, direct).clean());
}

TEST_CASE("the empty pattern is equivalent everywhere") {
  EquivReport r = check_equivalence(parse_regex("", kAB), kAB, {});
  CHECK(r.clean());
  CHECK(r.tested_inputs == 127);  // all strings over two symbols up to length 6
}

TEST_CASE("the budget guard rejects oversized campaigns") {
  CHECK_THROWS_AS(check_equivalence(parse_regex("a", Alphabet::of("abcde")),
                                    Alphabet::of("abcde"), {}),
                  std::invalid_argument);
  EquivOptions big;
  big.max_len = 11;
  CHECK_THROWS_AS(check_equivalence(parse_regex("a", kAB), kAB, big), std::invalid_argument);
}

TEST_CASE("fuzz campaigns are clean and deterministic") {
  FuzzOptions fo;
  fo.count = 150;
  fo.depth = 5;
  fo.max_len = 5;
  FuzzSummary a = fuzz_equivalence(kAB, fo);
  FuzzSummary b = fuzz_equivalence(kAB, fo);
  CHECK(a.tested == 150);
  CHECK(a.violations == 0);
  CHECK(a.total_inputs == b.total_inputs);
}

TEST_CASE("bench rows agree across modes and an empty pattern list is empty") {
  std::string corpus = generate_corpus(42, 64 * 1024, {"Xanthophyll"});
  BenchOptions bo;
  bo.repetitions = 3;
  bo.modes = {SearchMode::Naive, SearchMode::FirstSkip};
  auto rows = run_bench({"Xanthophyll", "zzzzzzzz"}, corpus, "corpus", Alphabet::all_bytes(), bo);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].hit == rows[1].hit);
  REQUIRE(rows[0].hit.has_value());
  CHECK_FALSE(rows[2].hit.has_value());  // the absent word misses in both modes
  CHECK(rows[2].hit == rows[3].hit);
  for (const auto& row : rows) CHECK(row.elapsed.count() >= 0);

  CHECK(run_bench({}, corpus, "corpus", Alphabet::all_bytes(), bo).empty());
}

TEST_CASE("the corpus generator is deterministic and plants each word once") {
  std::string a = generate_corpus(7, 32 * 1024, {"Xanthophyll", "Quixotry"});
  std::string b = generate_corpus(7, 32 * 1024, {"Xanthophyll", "Quixotry"});
  CHECK(a == b);
  auto count = [&](std::string_view needle) {
    std::size_t n = 0;
    for (std::size_t at = a.find(needle); at != std::string::npos; at = a.find(needle, at + 1))
      ++n;
    return n;
  };
  CHECK(count("Xanthophyll") == 1);
  CHECK(count("Quixotry") == 1);
  // planted words sit after a word boundary so `word space target` patterns
  // can anchor on them
  std::size_t at = a.find("Xanthophyll");
  REQUIRE(at != std::string::npos);
  REQUIRE(at >= 2);
  CHECK(a[at - 1] == ' ');
  CHECK(std::islower(static_cast<unsigned char>(a[at - 2])));
}
