#include <doctest.h>

#include <random>

#include "repeg/generate.hpp"
#include "repeg/peg_match.hpp"
#include "repeg/peg_syntax.hpp"
#include "repeg/regex_syntax.hpp"
#include "repeg/search.hpp"
#include "support.hpp"

using namespace repeg;

namespace {

const Alphabet kAll = Alphabet::all_bytes();
const Alphabet kABC = Alphabet::of("abc");

std::optional<SearchHit> find(std::string_view pattern, std::string_view subject,
                              SearchMode mode, const Alphabet& a = kAll) {
  SearchGrammar sg = build_search_grammar(parse_regex(pattern, a), a, mode);
  return search(sg, subject);
}

// reference definition: smallest start whose anchored match succeeds; the
// outer optional is empty when an attempt hits the fuel cap (ambiguous
// patterns can make restricted backtracking exponential)
std::optional<std::optional<SearchHit>> brute_force(std::string_view pattern,
                                                    std::string_view subject,
                                                    const Alphabet& a) {
  Grammar g = compile(parse_regex(pattern, a), a);
  PegMatcher m(g);
  MatchOptions opts;
  opts.fuel = 300'000;
  for (std::size_t s = 0; s <= subject.size(); ++s) {
    MatchOutcome out = m.match(subject.substr(s), opts);
    if (out.out_of_fuel()) return std::nullopt;
    if (out.is_match()) return std::optional<SearchHit>(SearchHit{s, s + out.consumed});
  }
  return std::optional<SearchHit>(std::nullopt);
}

}  // namespace

TEST_CASE("wrapper productions per mode") {
  auto text = [](std::string_view pattern, SearchMode mode, const Alphabet& a) {
    return grammar_to_text(build_search_grammar(parse_regex(pattern, a), a, mode).grammar);
  };
  CHECK(text("aa", SearchMode::Naive, kABC) == "S <- 'a' 'a' / . S\n");
  CHECK(text("ab", SearchMode::FirstSkip, kABC) == "S <- (!'a' .)* ('a' 'b' / . S)\n");
  CHECK(text("[bc]*a", SearchMode::CombinedDisjoint, kABC) ==
        "S <- (![a-c] .)* [bc]* ('a' / S)\n");
  CHECK(text("[ab]*a", SearchMode::Combined, kABC) ==
        "S <- (![ab] .)* (A0 / [ab]* S)\n"
        "A0 <- (!'a' [ab])* ([ab] A0 / 'a')\n");
  // one-or-more shape keeps the leading unit
  CHECK(text("[bc]+a", SearchMode::CombinedDisjoint, kABC) ==
        "S <- (![bc] .)* [bc] [bc]* ('a' / S)\n");
}

TEST_CASE("literal hits and misses") {
  auto hit = find("aa", "baab", SearchMode::Naive);
  REQUIRE(hit);
  CHECK(*hit == SearchHit{1, 3});
  CHECK_FALSE(find("xy", "xxxx", SearchMode::Naive));
  CHECK_FALSE(find("xy", "", SearchMode::FirstSkip));
}

TEST_CASE("mode fallbacks are recorded") {
  // nullable patterns cannot skip by FIRST symbol
  SearchGrammar sg = build_search_grammar(parse_regex("a*", kAll), kAll, SearchMode::FirstSkip);
  CHECK(sg.requested == SearchMode::FirstSkip);
  CHECK(sg.effective == SearchMode::Naive);
  // no repetition shape
  SearchGrammar s2 = build_search_grammar(parse_regex("ab", kAll), kAll, SearchMode::Combined);
  CHECK(s2.effective == SearchMode::FirstSkip);
  // overlapping FIRST sets cap the disjoint variant
  SearchGrammar s3 =
      build_search_grammar(parse_regex("[ab]*a", kAll), kAll, SearchMode::CombinedDisjoint);
  CHECK(s3.effective == SearchMode::Combined);
  // a repeated unit longer than one symbol cannot be skipped over
  SearchGrammar s4 =
      build_search_grammar(parse_regex("(ab)*c", kAll), kAll, SearchMode::CombinedDisjoint);
  CHECK(s4.effective == SearchMode::FirstSkip);
}

TEST_CASE("strongest mode selection") {
  CHECK(strongest_search_mode(parse_regex("a*", kAll)) == SearchMode::Naive);
  CHECK(strongest_search_mode(parse_regex("abc", kAll)) == SearchMode::FirstSkip);
  CHECK(strongest_search_mode(parse_regex("[ab]*a", kAll)) == SearchMode::Combined);
  CHECK(strongest_search_mode(parse_regex("[bc]*a", kAll)) == SearchMode::CombinedDisjoint);
  CHECK(strongest_search_mode(parse_regex("[bc]+a", kAll)) == SearchMode::CombinedDisjoint);
}

TEST_CASE("nullable patterns match at the first offset") {
  auto hit = find("a*", "bbb", SearchMode::Naive);
  REQUIRE(hit);
  CHECK(*hit == SearchHit{0, 0});
}

TEST_CASE("all applicable modes agree with the brute-force definition") {
  std::mt19937_64 rng(7);
  const SearchMode all_modes[] = {SearchMode::Naive, SearchMode::FirstSkip, SearchMode::Combined,
                                  SearchMode::CombinedDisjoint};
  int completed = 0, skipped = 0;
  for (int round = 0; round < 120; ++round) {
    RegexPtr e;
    if (round % 3 == 0) {
      // force repetition shapes so the combined modes genuinely engage
      std::string unit(1, static_cast<char>('a' + rng() % 3));
      std::string tail(1, static_cast<char>('a' + rng() % 3));
      e = parse_regex("[" + unit + "]*" + tail, kABC);
    } else {
      e = random_regex(rng(), 4, kABC, false);
    }
    std::string subject;
    std::size_t len = rng() % 200;
    for (std::size_t i = 0; i < len; ++i) subject += static_cast<char>('a' + rng() % 3);

    std::string pattern = print_regex(e, kABC);
    auto want = brute_force(pattern, subject, kABC);
    if (!want) {
      ++skipped;
      continue;
    }
    try {
      for (SearchMode mode : all_modes) {
        SearchGrammar sg = build_search_grammar(e, kABC, mode);
        auto got = search(sg, subject);
        CHECK_MESSAGE(got == *want, "pattern ", pattern, " subject ", subject, " mode ",
                      to_string(mode));
      }
      ++completed;
    } catch (const SearchFuelError&) {
      ++skipped;
    }
  }
  CHECK(completed >= 100);
  CHECK(skipped <= 20);
}

TEST_CASE("skipped offsets can never start a match") {
  SearchGrammar sg =
      build_search_grammar(parse_regex("ca", kABC), kABC, SearchMode::FirstSkip);
  std::string subject = "abbacabb";
  auto hit = search(sg, subject);
  REQUIRE(hit);
  CHECK(*hit == SearchHit{4, 6});
  PegMatcher anchored(sg.anchored);
  for (std::size_t s = 0; s < hit->start; ++s)
    CHECK(anchored.match(subject.substr(s)).is_fail());
}

TEST_CASE("search propagates fuel exhaustion") {
  SearchGrammar sg = build_search_grammar(parse_regex("aab", kAll), kAll, SearchMode::Naive);
  std::string subject(2000, 'a');
  CHECK_THROWS_AS(search(sg, subject, 100), SearchFuelError);
}
