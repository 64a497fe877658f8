#include <doctest.h>

#include "repeg/equivalence.hpp"
#include "repeg/generate.hpp"
#include "repeg/oracle.hpp"
#include "repeg/peg_match.hpp"
#include "repeg/peg_syntax.hpp"
#include "repeg/regex_syntax.hpp"
#include "repeg/rewrite.hpp"
#include "repeg/transform.hpp"
#include "support.hpp"

using namespace repeg;

namespace {

const Alphabet kAB = Alphabet::of("ab");
const Alphabet kABC = Alphabet::of("abc");

std::string compiled_text(std::string_view pattern, const Alphabet& a,
                          CompileOptions opts = {}) {
  return grammar_to_text(compile(parse_regex(pattern, a), a, opts));
}

}  // namespace

TEST_CASE("translation of the two worked repetition grammars") {
  CHECK(compiled_text("(a|b|c)*a(a|b|c)*", kABC, {true, false}) ==
        "A1 <- 'a' A1 / 'b' A1 / 'c' A1 / 'a' A0\n"
        "A0 <- 'a' A0 / 'b' A0 / 'c' A0 / ()\n");
  CHECK(compiled_text("(b|c)*a(a|b|c)*", kABC, {true, false}) ==
        "A1 <- 'b' A1 / 'c' A1 / 'a' A0\n"
        "A0 <- 'a' A0 / 'b' A0 / 'c' A0 / ()\n");
}

TEST_CASE("translation of the marker pattern") {
  CHECK(compiled_text("b*b#", Alphabet::of("b#"), {true, false}) ==
        "A0 <- 'b' A0 / 'b' '#'\n");
}

TEST_CASE("the empty pattern keeps the continuation grammar") {
  NameSupply names;
  Grammar k;
  k.alphabet = kAB;
  k.start = pe::cls(CharSet::single('a'));
  Grammar out = transform(rx::empty(), k, names);
  CHECK(grammar_to_text(out) == "START <- 'a'\n");
}

TEST_CASE("single symbols translate to bare terminals") {
  CHECK(compiled_text("a", kAB) == "START <- 'a'\n");
  CHECK(compiled_text(".", kAB) == "START <- .\n");
}

TEST_CASE("extension translations") {
  // atomic: translate against an empty continuation, then concatenate
  CHECK(compiled_text("(?>a|ab)c", kABC) == "START <- ('a' / 'a' 'b') 'c'\n");
  // lazy: the continuation comes first in the fresh production
  CHECK(compiled_text("a*?b", kAB) == "A0 <- 'b' / 'a' A0\n");
  // possessive is atomic over a repetition
  CHECK(compiled_text("a*+b", kAB, {true, false}) == "START <- A0 'b'\nA0 <- 'a' A0 / ()\n");
  // lookaheads become single and double negation
  CHECK(compiled_text("(?!a)b", kAB) == "START <- !'a' 'b'\n");
  CHECK(compiled_text("(?=a)b", kAB) == "START <- !!'a' 'b'\n");
}

TEST_CASE("translated extensions behave like the backtracking engine") {
  Grammar atomic_commit = compile(parse_regex("(?>a|ab)c", kABC), kABC);
  CHECK(peg_match(atomic_commit, "abc") == MatchOutcome::fail());
  Grammar distributed = compile(parse_regex("(a|ab)c", kABC), kABC);
  CHECK(peg_match(distributed, "abc") == MatchOutcome::matched(3));

  Grammar lazy = compile(parse_regex("a*?b", kAB), kAB);
  CHECK(peg_match(lazy, "aab") == MatchOutcome::matched(3));
  CHECK(peg_match(lazy, "baa") == MatchOutcome::matched(1));

  Grammar possessive = compile(parse_regex("a*+a", kAB), kAB);
  CHECK(peg_match(possessive, "aaa") == MatchOutcome::fail());
}

TEST_CASE("non-well-formed input is rejected without rewriting") {
  RegexPtr e = parse_regex("(a|())*b", kAB);
  CHECK_THROWS_AS(compile(e, kAB, {false, true}), NotWellFormedError);
  CHECK(grammar_equal(compile(e, kAB), compile(parse_regex("a*b", kAB), kAB)));
}

TEST_CASE("compiled grammars are always complete") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    RegexPtr e = random_regex(seed, 6, kAB, seed % 2 == 0);
    Grammar g = compile(e, kAB);
    CHECK(is_complete(g));
  }
}

TEST_CASE("optimized repetition: disjoint and guarded forms") {
  CHECK(compiled_text("[bc]*a", kABC) == "START <- [bc]* 'a'\n");
  CHECK(compiled_text("[ab]*a", kABC) == "A0 <- (!'a' [ab])* ([ab] A0 / 'a')\n");
  // an empty tail is disjoint with everything: pure possessive repetition
  CHECK(compiled_text("[ab]*()", kABC) == "START <- [ab]*\n");
  // without the optimization the plain production appears
  CHECK(compiled_text("[bc]*a", kABC, {true, false}) == "A0 <- [bc] A0 / 'a'\n");
}

TEST_CASE("optimized and plain translations give identical outcomes") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    RegexPtr rep = random_regex(seed * 2, 3, kAB, false);
    RegexPtr tail = random_regex(seed * 2 + 1, 3, kAB, false);
    RegexPtr e = make_well_formed(rx::concat(rx::star(rep), tail));
    Grammar fast = compile(e, kAB, {true, true});
    Grammar plain = compile(e, kAB, {true, false});
    PegMatcher mf(fast), mp(plain);
    for (const std::string& s : test::strings_upto(kAB, 6)) CHECK(mf.match(s) == mp.match(s));
  }
}

TEST_CASE("the guarded form stays plain when the tail hides behind lookaheads") {
  // tail (?=a)|c can match empty mid-run, which FIRST cannot express
  RegexPtr e = parse_regex("[ac]*((?=a)|c)", kABC);
  Grammar fast = compile(e, kABC, {true, true});
  Grammar plain = compile(e, kABC, {true, false});
  for (const std::string& s : test::strings_upto(kABC, 5))
    CHECK(peg_match(fast, s) == peg_match(plain, s));
}

TEST_CASE("ambiguous repetition bodies stay plain") {
  // committing (a|ab) per iteration would lose the two-symbol split
  RegexPtr e = parse_regex("(a|ab)*c", kABC);
  Grammar fast = compile(e, kABC, {true, true});
  CHECK(peg_match(fast, "abc") == MatchOutcome::matched(3));
  CHECK(grammar_equal(fast, compile(e, kABC, {true, false})));
}

TEST_CASE("direct star-concat translation entry point") {
  NameSupply names;
  Grammar k;
  k.alphabet = kABC;
  k.start = pe::empty();
  Grammar g = transform_star_concat(parse_regex("[bc]", kABC), parse_regex("a", kABC), k, names);
  CHECK(grammar_to_text(g) == "START <- [bc]* 'a'\n");
}

TEST_CASE("ordered choice is not commutative, with the stored witness") {
  Grammar left = compile(parse_regex("a|ab", kAB), kAB);
  Grammar right = compile(parse_regex("ab|a", kAB), kAB);
  CHECK(peg_match(left, "ab") == MatchOutcome::matched(1));
  CHECK(peg_match(right, "ab") == MatchOutcome::matched(2));
}

TEST_CASE("equivalence lemmas on a small population") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RegexPtr e = random_regex(seed, 5, kAB, false);
    if (!is_well_formed(e)) continue;
    Grammar g = compile(e, kAB);
    PegMatcher m(g);
    for (const std::string& s : test::strings_upto(kAB, 5)) {
      MatchOutcome peg = m.match(s);
      REQUIRE_FALSE(peg.out_of_fuel());
      PrefixSet p = match_prefixes(e, s);
      if (peg.is_match()) CHECK(p.contains(peg.consumed));
      if (!p.empty()) CHECK_FALSE(peg.is_fail());
      CHECK(peg == backtrack_match(e, s));
    }
  }
}

TEST_CASE("marker patterns recognize exactly the language") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RegexPtr e = random_regex(seed, 4, kAB, false);
    if (!is_well_formed(e)) continue;
    Alphabet abm = Alphabet::of("ab#");
    RegexPtr marked = rx::concat(e, rx::chr('#'));
    Grammar g = compile(marked, abm);
    PegMatcher m(g);
    for (const std::string& s : test::strings_upto(abm, 5)) {
      PrefixSet p = match_prefixes(marked, s);
      MatchOutcome peg = m.match(s);
      REQUIRE(p.count() <= 1);  // the marker gives the prefix property
      if (p.empty()) {
        CHECK(peg.is_fail());
      } else {
        CHECK(peg == MatchOutcome::matched(p.lengths()[0]));
      }
    }
  }
}
