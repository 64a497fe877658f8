#include "repeg/search.hpp"

#include <cassert>

#include "repeg/peg_match.hpp"
#include "repeg/rewrite.hpp"

namespace repeg {

std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::Naive:
      return "naive";
    case SearchMode::FirstSkip:
      return "first";
    case SearchMode::Combined:
      return "combined";
    case SearchMode::CombinedDisjoint:
      return "combined-disjoint";
  }
  return "?";
}

std::optional<SearchMode> search_mode_from_string(std::string_view s) {
  if (s == "naive") return SearchMode::Naive;
  if (s == "first") return SearchMode::FirstSkip;
  if (s == "combined") return SearchMode::Combined;
  if (s == "combined-disjoint" || s == "disjoint") return SearchMode::CombinedDisjoint;
  return std::nullopt;
}

namespace {

// e1* e2 or e1 e1* e2 with every e1 match one symbol long.
struct RepetitionShape {
  bool valid = false;
  bool plus = false;  // e1 e1* e2
  RegexPtr rep;       // e1
  RegexPtr tail;      // e2
};

RepetitionShape repetition_shape(const RegexPtr& e) {
  RepetitionShape s;
  if (e->kind != RegexKind::Concat) return s;
  if (e->left->kind == RegexKind::Star && is_length_one(e->left->left)) {
    s.valid = true;
    s.rep = e->left->left;
    s.tail = e->right;
    return s;
  }
  // e1 (e1* e2)
  if (is_length_one(e->left) && e->right->kind == RegexKind::Concat &&
      e->right->left->kind == RegexKind::Star &&
      structurally_equal(e->right->left->left, e->left)) {
    s.valid = true;
    s.plus = true;
    s.rep = e->left;
    s.tail = e->right->right;
    return s;
  }
  return s;
}

std::string fresh_search_name(const Grammar& g) {
  if (!g.defines("S")) return "S";
  for (std::uint64_t k = 1;; ++k) {
    std::string name = "S" + std::to_string(k);
    if (!g.defines(name)) return name;
  }
}

}  // namespace

SearchMode strongest_search_mode(const RegexPtr& e, const CompileOptions& copts) {
  RegexPtr wf = copts.rewrite ? make_well_formed(e) : e;
  wf = normalize_concat_right(wf);
  if (is_nullable(wf)) return SearchMode::Naive;
  RepetitionShape shape = repetition_shape(wf);
  if (!shape.valid) return SearchMode::FirstSkip;
  if (!first_set(shape.rep).intersects(first_set(shape.tail)))
    return SearchMode::CombinedDisjoint;
  return SearchMode::Combined;
}

SearchGrammar build_search_grammar(const RegexPtr& e, const Alphabet& alphabet, SearchMode mode,
                                   const CompileOptions& copts) {
  SearchGrammar out;
  out.requested = mode;

  RegexPtr wf = copts.rewrite ? make_well_formed(e) : e;
  wf = normalize_concat_right(wf);
  if (!is_well_formed(wf))
    throw NotWellFormedError("search pattern is not well-formed (enable rewriting)");

  out.nullable = is_nullable(wf);
  out.first = first_set(wf);
  out.anchored = compile(wf, alphabet, CompileOptions{false, copts.optimize_repetition});

  SearchMode strongest = strongest_search_mode(wf, CompileOptions{false, copts.optimize_repetition});
  SearchMode effective = std::min(mode, strongest);
  out.effective = effective;

  TransformOptions topts;
  topts.optimize_repetition = copts.optimize_repetition;
  NameSupply names;

  Grammar g;
  g.alphabet = alphabet;
  g.start = pe::empty();

  // only built for the skipping modes; a nullable pattern may have an empty
  // FIRST set and always falls back to naive search
  auto skip = [&out] {
    return pe::star(pe::concat_raw(pe::negate(pe::cls(out.first)), pe::any()));
  };

  switch (effective) {
    case SearchMode::Naive: {
      g = transform(wf, std::move(g), names, topts);
      PegPtr p = g.start;
      std::string sname = fresh_search_name(g);
      g.add_production(sname,
                       pe::choice(p, pe::concat_raw(pe::any(), pe::nonterminal(sname))));
      g.start = pe::nonterminal(sname);
      break;
    }
    case SearchMode::FirstSkip: {
      g = transform(wf, std::move(g), names, topts);
      PegPtr p = g.start;
      std::string sname = fresh_search_name(g);
      g.add_production(
          sname, pe::concat_raw(
                     skip(), pe::choice(p, pe::concat_raw(pe::any(), pe::nonterminal(sname)))));
      g.start = pe::nonterminal(sname);
      break;
    }
    case SearchMode::Combined: {
      RepetitionShape shape = repetition_shape(wf);
      assert(shape.valid);
      g = transform(wf, std::move(g), names, topts);
      PegPtr p = g.start;
      Grammar sub = transform(shape.rep, g.with_start(pe::empty()), names, topts);
      PegPtr p1 = sub.start;
      g.productions = std::move(sub.productions);
      std::string sname = fresh_search_name(g);
      g.add_production(
          sname, pe::concat_raw(skip(), pe::choice(p, pe::concat_raw(pe::star(p1),
                                                                     pe::nonterminal(sname)))));
      g.start = pe::nonterminal(sname);
      break;
    }
    case SearchMode::CombinedDisjoint: {
      // the wrapper never runs the whole pattern, only its two halves
      RepetitionShape shape = repetition_shape(wf);
      assert(shape.valid);
      g = transform(shape.rep, std::move(g), names, topts);
      PegPtr p1 = g.start;
      g.start = pe::empty();
      g = transform(shape.tail, std::move(g), names, topts);
      PegPtr p2 = g.start;
      std::string sname = fresh_search_name(g);
      PegPtr rest = pe::concat_raw(pe::star(p1), pe::choice(p2, pe::nonterminal(sname)));
      if (shape.plus) rest = pe::concat_raw(p1, std::move(rest));
      g.add_production(sname, pe::concat_raw(skip(), std::move(rest)));
      g.start = pe::nonterminal(sname);
      break;
    }
  }
  out.grammar = std::move(g);
  return out;
}

std::uint64_t auto_search_fuel(const Grammar& g, std::size_t subject_len) {
  std::uint64_t per_pos = 64 * static_cast<std::uint64_t>(g.size());
  return kDefaultPegFuel + per_pos * (static_cast<std::uint64_t>(subject_len) + 1);
}

std::optional<SearchHit> search(const SearchGrammar& sg, std::string_view subject,
                                std::uint64_t fuel) {
  if (fuel == 0) fuel = auto_search_fuel(sg.grammar, subject.size());

  MatchOptions opts;
  opts.fuel = fuel;
  MatchOutcome found = PegMatcher(sg.grammar).match(subject, opts);
  if (found.out_of_fuel()) throw SearchFuelError();
  if (found.is_fail()) return std::nullopt;
  std::size_t end = found.consumed;

  // The wrapper consumed up to the end of the leftmost hit; locate the start
  // as the smallest offset where the pattern matches on its own. Offsets
  // whose first symbol cannot begin a match are skipped.
  PegMatcher anchored(sg.anchored);
  MatchOptions aopts;
  aopts.fuel = auto_search_fuel(sg.anchored, subject.size());
  for (std::size_t s = 0; s <= subject.size(); ++s) {
    if (!sg.nullable) {
      while (s < subject.size() && !sg.first.test(static_cast<unsigned char>(subject[s]))) ++s;
      if (s >= subject.size()) break;
    }
    MatchOutcome at = anchored.match(subject.substr(s), aopts);
    if (at.out_of_fuel()) throw SearchFuelError();
    if (at.is_match()) return SearchHit{s, end};
  }
  // the wrapper found a match, so an anchored match must exist
  throw std::logic_error("search: inconsistent wrapper and anchored results");
}

}  // namespace repeg
