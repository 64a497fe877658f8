#include "repeg/transform.hpp"

#include <cassert>
#include <utility>

#include "repeg/rewrite.hpp"

namespace repeg {

namespace {

// The production set only ever grows while the start expression is rebuilt
// continuation-first, so one builder carries the whole translation.
class Translator {
 public:
  Translator(Grammar&& seed, NameSupply& names, const TransformOptions& opts)
      : g_(std::move(seed)), names_(names), opts_(opts) {}

  Grammar finish(const RegexPtr& e) {
    g_.start = emit(e, g_.start);
    return std::move(g_);
  }

  Grammar finish_star_concat(const RegexPtr& rep_body, const RegexPtr& tail) {
    if (optimizable_body(rep_body) && optimizable_tail(tail, g_.start)) {
      g_.start = emit_star_concat(rep_body, tail, g_.start);
    } else {
      PegPtr cont = emit(tail, g_.start);
      RegexPtr starred = rx::star(rep_body);
      g_.start = emit(starred, std::move(cont));
    }
    return std::move(g_);
  }

 private:
  Grammar g_;
  NameSupply& names_;
  TransformOptions opts_;

  std::string fresh() {
    return names_.fresh([this](const std::string& n) { return g_.defines(n); });
  }

  PegPtr terminal(const CharSet& set) {
    if (set == g_.alphabet.symbols) return pe::any();
    return pe::cls(set);
  }

  // One fixed way to match at any position: a chain of classes and ε. The
  // translated unit then has no live choice points, so gluing it in front of
  // a continuation is the same as translating with that continuation.
  static bool single_match(const RegexPtr& e) {
    if (e->kind == RegexKind::Empty || e->kind == RegexKind::Class) return true;
    if (e->kind == RegexKind::Concat) return single_match(e->left) && single_match(e->right);
    return false;
  }

  // The repeated unit is treated as a committed whole, which only preserves
  // outcomes when every way it matches resumes the continuation at the same
  // position: one fixed match, or any mix of single-symbol alternatives.
  static bool optimizable_body(const RegexPtr& body) {
    return single_match(body) || is_length_one(body);
  }

  // The optimized repetition is only outcome-preserving when FIRST(tail)
  // covers every way the translated tail can begin a match. Lookaheads can
  // make the tail match empty at some positions and fail at others, which
  // FIRST cannot see; a nullable tail followed by a non-empty continuation
  // can begin a match with symbols FIRST(tail) knows nothing about. Both
  // take the plain route.
  bool optimizable_tail(const RegexPtr& tail, const PegPtr& cont) const {
    if (!opts_.optimize_repetition) return false;
    if (has_lookahead(tail)) return false;
    return !is_nullable(tail) || cont->kind == PegKind::Empty;
  }

  PegPtr emit(const RegexPtr& e, PegPtr cont) {
    switch (e->kind) {
      case RegexKind::Empty:
        return cont;
      case RegexKind::Class:
        return pe::concat(terminal(e->cls), std::move(cont));
      case RegexKind::Concat:
        if (e->left->kind == RegexKind::Star && optimizable_body(e->left->left) &&
            optimizable_tail(e->right, cont))
          return emit_star_concat(e->left->left, e->right, std::move(cont));
        return emit(e->left, emit(e->right, std::move(cont)));
      case RegexKind::Choice: {
        PegPtr p1 = emit(e->left, cont);
        PegPtr p2 = emit(e->right, cont);
        return pe::choice(std::move(p1), std::move(p2));
      }
      case RegexKind::Star: {
        std::string name = fresh();
        PegPtr body = emit(e->left, pe::nonterminal(name));
        g_.add_production(name, pe::choice(std::move(body), std::move(cont)));
        return pe::nonterminal(name);
      }
      case RegexKind::Lazy: {
        // try the continuation first, take another step only when it fails
        std::string name = fresh();
        PegPtr body = emit(e->left, pe::nonterminal(name));
        g_.add_production(name, pe::choice(std::move(cont), std::move(body)));
        return pe::nonterminal(name);
      }
      case RegexKind::Atomic: {
        PegPtr body = emit(e->left, pe::empty());
        return pe::concat(std::move(body), std::move(cont));
      }
      case RegexKind::Possessive: {
        RegexPtr starred = rx::star(e->left);
        PegPtr body = emit(starred, pe::empty());
        return pe::concat(std::move(body), std::move(cont));
      }
      case RegexKind::NegLookahead: {
        PegPtr body = emit(e->left, pe::empty());
        return pe::concat(pe::negate(std::move(body)), std::move(cont));
      }
      case RegexKind::PosLookahead: {
        PegPtr body = emit(e->left, pe::empty());
        return pe::concat(pe::negate(pe::negate(std::move(body))), std::move(cont));
      }
    }
    return cont;
  }

  PegPtr emit_star_concat(const RegexPtr& rep_body, const RegexPtr& tail, PegPtr cont) {
    PegPtr p2 = emit(tail, std::move(cont));
    CharSet f1 = first_set(rep_body);
    CharSet f2 = first_set(tail);
    PegPtr p1 = emit(rep_body, pe::empty());
    if (!f1.intersects(f2)) {
      // the tail can never begin inside the repetition, match possessively
      return pe::concat(pe::star(std::move(p1)), std::move(p2));
    }
    std::string name = fresh();
    PegPtr guarded = pe::concat_raw(pe::negate(pe::cls(f2)), p1);
    g_.add_production(name,
                      pe::concat(pe::star(std::move(guarded)),
                                 pe::choice(pe::concat(std::move(p1), pe::nonterminal(name)),
                                            std::move(p2))));
    return pe::nonterminal(name);
  }
};

}  // namespace

Grammar transform(const RegexPtr& e, Grammar continuation, NameSupply& names,
                  const TransformOptions& opts) {
  if (!is_well_formed(e))
    throw NotWellFormedError(
        "pattern has a repetition over a nullable expression; the translated "
        "grammar would not be complete (enable rewriting)");
  Translator tr(std::move(continuation), names, opts);
  return tr.finish(e);
}

Grammar transform_star_concat(const RegexPtr& rep_body, const RegexPtr& tail,
                              Grammar continuation, NameSupply& names,
                              const TransformOptions& opts) {
  RegexPtr whole = rx::concat(rx::star(rep_body), tail);
  if (!is_well_formed(whole))
    throw NotWellFormedError("repetition body or tail is not well-formed");
  Translator tr(std::move(continuation), names, opts);
  return tr.finish_star_concat(rep_body, tail);
}

Grammar compile(const RegexPtr& e, const Alphabet& alphabet, const CompileOptions& opts) {
  RegexPtr wf = opts.rewrite ? make_well_formed(e) : e;
  RegexPtr normalized = normalize_concat_right(wf);
  Grammar seed;
  seed.alphabet = alphabet;
  seed.start = pe::empty();
  NameSupply names;
  TransformOptions topts;
  topts.optimize_repetition = opts.optimize_repetition;
  return transform(normalized, std::move(seed), names, topts);
}

}  // namespace repeg
