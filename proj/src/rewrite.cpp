#include "repeg/rewrite.hpp"

#include <cassert>

namespace repeg {

namespace {

// The three-way split shared by all repetition kinds: recurse when the body
// cannot match empty, drop the repetition entirely when the body is ε-only,
// otherwise strip ε from the body.
template <typename Rebuild>
RegexPtr rewrite_repetition(const RegexPtr& body, Rebuild&& rebuild) {
  if (!is_nullable(body)) return rebuild(make_well_formed(body));
  if (matches_only_empty(body)) return rx::empty();
  return rebuild(make_non_nullable(body));
}

}  // namespace

RegexPtr make_well_formed(const RegexPtr& e) {
  switch (e->kind) {
    case RegexKind::Empty:
    case RegexKind::Class:
      return e;
    case RegexKind::Concat:
      return rx::concat(make_well_formed(e->left), make_well_formed(e->right));
    case RegexKind::Choice:
      return rx::choice(make_well_formed(e->left), make_well_formed(e->right));
    case RegexKind::Star:
      return rewrite_repetition(e->left, [](RegexPtr b) { return rx::star(std::move(b)); });
    case RegexKind::Possessive:
      return rewrite_repetition(e->left, [](RegexPtr b) { return rx::possessive(std::move(b)); });
    case RegexKind::Lazy:
      return rewrite_repetition(e->left, [](RegexPtr b) { return rx::lazy(std::move(b)); });
    case RegexKind::Atomic:
      return rx::atomic(make_well_formed(e->left));
    case RegexKind::NegLookahead:
      return rx::neg_lookahead(make_well_formed(e->left));
    case RegexKind::PosLookahead:
      return rx::pos_lookahead(make_well_formed(e->left));
  }
  return e;
}

RegexPtr make_non_nullable(const RegexPtr& e) {
  assert(is_nullable(e) && !matches_only_empty(e));
  switch (e->kind) {
    case RegexKind::Concat:
      // inside a repetition (AB)* equals (A|B)* when both sides accept ε
      return make_non_nullable(rx::choice(e->left, e->right));
    case RegexKind::Choice: {
      const RegexPtr& e1 = e->left;
      const RegexPtr& e2 = e->right;
      // rows are tried top to bottom, first guard that holds wins
      if (matches_only_empty(e1) && is_nullable(e2)) return make_non_nullable(e2);
      if (matches_only_empty(e1) && !is_nullable(e2)) return make_well_formed(e2);
      if (is_nullable(e1) && matches_only_empty(e2)) return make_non_nullable(e1);
      if (!is_nullable(e1) && matches_only_empty(e2)) return make_well_formed(e1);
      if (!is_nullable(e1) && !matches_only_empty(e2))
        return rx::choice(make_well_formed(e1), make_non_nullable(e2));
      if (!matches_only_empty(e1) && !is_nullable(e2))
        return rx::choice(make_non_nullable(e1), make_well_formed(e2));
      return rx::choice(make_non_nullable(e1), make_non_nullable(e2));
    }
    case RegexKind::Star:
    case RegexKind::Possessive:
    case RegexKind::Lazy:
      // the enclosing repetition governs how much is matched, so the inner
      // repetition is superfluous
      if (is_nullable(e->left)) return make_non_nullable(e->left);
      return make_well_formed(e->left);
    case RegexKind::Atomic:
      return rx::atomic(make_non_nullable(e->left));
    case RegexKind::Empty:
    case RegexKind::Class:
    case RegexKind::NegLookahead:
    case RegexKind::PosLookahead:
      break;
  }
  // ε and classes violate the precondition; lookaheads are ε-only and are
  // always discarded by the choice rows before reaching here
  assert(false && "make_non_nullable: precondition violated");
  return e;
}

}  // namespace repeg
