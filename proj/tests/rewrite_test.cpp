#include <doctest.h>

#include "repeg/generate.hpp"
#include "repeg/oracle.hpp"
#include "repeg/regex_syntax.hpp"
#include "repeg/rewrite.hpp"
#include "support.hpp"

using namespace repeg;

namespace {

const Alphabet kAll = Alphabet::all_bytes();

RegexPtr parse(std::string_view s) { return parse_regex(s, kAll); }

void check_rewrites_to(std::string_view from, std::string_view to) {
  RegexPtr got = make_well_formed(parse(from));
  RegexPtr want = parse(to);
  CHECK_MESSAGE(structurally_equal(got, want),
                "rewrite of ", from, " gave ", print_regex(got, kAll), ", expected ", to);
}

}  // namespace

TEST_CASE("the nullable-repetition running example") {
  check_rewrites_to("(bc|a*(d|()))*", "(bc|(a|d))*");
}

TEST_CASE("well-formed expressions are left alone") {
  RegexPtr e = parse("(bc|a(d|()))*");
  CHECK(structurally_equal(make_well_formed(e), e));
}

TEST_CASE("extension repetitions rewrite to their non-empty cores") {
  check_rewrites_to("(?>()|a)*", "(?>a)*");
  check_rewrites_to("((?=a)(d|()))*", "d*");
  check_rewrites_to("(?>a|()|b)*", "(?>a|b)*");
  check_rewrites_to("((?=a)(a|()))*", "a*");
}

TEST_CASE("empty-only repetition bodies collapse") {
  check_rewrites_to("()*", "()");
  check_rewrites_to("()*?", "()");
  check_rewrites_to("()*+", "()");
  check_rewrites_to("((?!a)|(?=b))*", "()");
}

TEST_CASE("stripping the empty path") {
  CHECK(structurally_equal(make_non_nullable(parse("a*")), parse("a")));
  CHECK(structurally_equal(make_non_nullable(parse("()|a")), parse("a")));
  CHECK(structurally_equal(make_non_nullable(parse("a*(d|())")), parse("a|d")));
}

TEST_CASE("rewriting is idempotent") {
  Alphabet ab = Alphabet::of("ab");
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    RegexPtr e = random_regex(seed, 6, ab, seed % 2 == 0);
    RegexPtr once = make_well_formed(e);
    CHECK(structurally_equal(once, make_well_formed(once)));
  }
}

TEST_CASE("rewriting preserves the language of extension-free patterns") {
  Alphabet ab = Alphabet::of("ab");
  std::size_t rewritten = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    RegexPtr e = random_regex(seed, 6, ab, false);
    RegexPtr wf = make_well_formed(e);
    CHECK(is_well_formed(wf));
    if (!structurally_equal(e, wf)) ++rewritten;
    for (const std::string& s : test::strings_upto(ab, 5))
      CHECK(match_prefixes(e, s) == match_prefixes(wf, s));
  }
  CHECK(rewritten > 100);  // the population genuinely exercises the rewrite
}

TEST_CASE("rewritten output never keeps a nullable repetition body") {
  Alphabet ab = Alphabet::of("ab");
  for (std::uint64_t seed = 1000; seed < 1400; ++seed) {
    RegexPtr e = random_regex(seed, 6, ab, true);
    RegexPtr wf = make_well_formed(e);
    CHECK(is_well_formed(wf));
    if (is_nullable(e) && !matches_only_empty(e)) {
      CHECK_FALSE(is_nullable(make_non_nullable(e)));
    }
  }
}

TEST_CASE("extension rewriting matches at least as much on terminating inputs") {
  Alphabet ab = Alphabet::of("ab");
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    RegexPtr e = random_regex(seed, 5, ab, true);
    if (!has_extension(e)) continue;
    RegexPtr wf = make_well_formed(e);
    for (const std::string& s : test::strings_upto(ab, 5)) {
      MatchOutcome orig = backtrack_match(e, s, 30'000);
      if (orig.out_of_fuel()) continue;
      MatchOutcome after = backtrack_match(wf, s, 30'000);
      REQUIRE_FALSE(after.out_of_fuel());
      if (orig.is_match()) {
        REQUIRE(after.is_match());
        CHECK(after.consumed >= orig.consumed);
      }
    }
  }
}

TEST_CASE("a terminating input can still gain a longer match after rewriting") {
  // the repetition body can only fail here thanks to the lookahead, so the
  // engine terminates, but the rewrite widens the pattern
  RegexPtr e = parse("(a*(?=b))*");
  CHECK(backtrack_match(e, "a") == MatchOutcome::matched(0));
  RegexPtr wf = make_well_formed(e);
  CHECK(structurally_equal(wf, parse("a*")));
  CHECK(backtrack_match(wf, "a") == MatchOutcome::matched(1));
}
