#include "repeg/regex_ast.hpp"

#include <cassert>
#include <vector>

namespace repeg {

namespace rx {

namespace {

RegexPtr make(RegexKind kind, CharSet set, RegexPtr l, RegexPtr r) {
  return std::make_shared<RegexNode>(RegexNode{kind, set, std::move(l), std::move(r)});
}

}  // namespace

RegexPtr empty() { return make(RegexKind::Empty, {}, nullptr, nullptr); }

RegexPtr cls(CharSet set) {
  assert(!set.empty());
  return make(RegexKind::Class, set, nullptr, nullptr);
}

RegexPtr chr(unsigned char c) { return cls(CharSet::single(c)); }

RegexPtr concat(RegexPtr l, RegexPtr r) {
  return make(RegexKind::Concat, {}, std::move(l), std::move(r));
}

RegexPtr choice(RegexPtr l, RegexPtr r) {
  return make(RegexKind::Choice, {}, std::move(l), std::move(r));
}

RegexPtr star(RegexPtr body) { return make(RegexKind::Star, {}, std::move(body), nullptr); }

RegexPtr atomic(RegexPtr body) { return make(RegexKind::Atomic, {}, std::move(body), nullptr); }

RegexPtr possessive(RegexPtr body) {
  return make(RegexKind::Possessive, {}, std::move(body), nullptr);
}

RegexPtr lazy(RegexPtr body) { return make(RegexKind::Lazy, {}, std::move(body), nullptr); }

RegexPtr neg_lookahead(RegexPtr body) {
  return make(RegexKind::NegLookahead, {}, std::move(body), nullptr);
}

RegexPtr pos_lookahead(RegexPtr body) {
  return make(RegexKind::PosLookahead, {}, std::move(body), nullptr);
}

}  // namespace rx

bool is_extension(RegexKind k) {
  switch (k) {
    case RegexKind::Atomic:
    case RegexKind::Possessive:
    case RegexKind::Lazy:
    case RegexKind::NegLookahead:
    case RegexKind::PosLookahead:
      return true;
    default:
      return false;
  }
}

bool is_repetition(RegexKind k) {
  return k == RegexKind::Star || k == RegexKind::Possessive || k == RegexKind::Lazy;
}

bool has_extension(const RegexPtr& e) {
  if (!e) return false;
  if (is_extension(e->kind)) return true;
  return has_extension(e->left) || has_extension(e->right);
}

bool has_lookahead(const RegexPtr& e) {
  if (!e) return false;
  if (e->kind == RegexKind::NegLookahead || e->kind == RegexKind::PosLookahead) return true;
  return has_lookahead(e->left) || has_lookahead(e->right);
}

bool structurally_equal(const RegexPtr& a, const RegexPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == RegexKind::Class && !(a->cls == b->cls)) return false;
  return structurally_equal(a->left, b->left) && structurally_equal(a->right, b->right);
}

std::size_t node_count(const RegexPtr& e) {
  if (!e) return 0;
  return 1 + node_count(e->left) + node_count(e->right);
}

bool matches_only_empty(const RegexPtr& e) {
  switch (e->kind) {
    case RegexKind::Empty:
      return true;
    case RegexKind::Class:
      return false;
    case RegexKind::Concat:
    case RegexKind::Choice:
      return matches_only_empty(e->left) && matches_only_empty(e->right);
    case RegexKind::Star:
    case RegexKind::Atomic:
    case RegexKind::Possessive:
    case RegexKind::Lazy:
      return matches_only_empty(e->left);
    case RegexKind::NegLookahead:
    case RegexKind::PosLookahead:
      return true;
  }
  return false;
}

bool is_nullable(const RegexPtr& e) {
  switch (e->kind) {
    case RegexKind::Empty:
      return true;
    case RegexKind::Class:
      return false;
    case RegexKind::Concat:
      return is_nullable(e->left) && is_nullable(e->right);
    case RegexKind::Choice:
      return is_nullable(e->left) || is_nullable(e->right);
    case RegexKind::Star:
    case RegexKind::Possessive:
    case RegexKind::Lazy:
    case RegexKind::NegLookahead:
    case RegexKind::PosLookahead:
      return true;
    case RegexKind::Atomic:
      return is_nullable(e->left);
  }
  return false;
}

CharSet first_set(const RegexPtr& e) {
  switch (e->kind) {
    case RegexKind::Empty:
      return {};
    case RegexKind::Class:
      return e->cls;
    case RegexKind::Concat:
      if (!is_nullable(e->left)) return first_set(e->left);
      return first_set(e->left) | first_set(e->right);
    case RegexKind::Choice:
      return first_set(e->left) | first_set(e->right);
    case RegexKind::Star:
    case RegexKind::Atomic:
    case RegexKind::Possessive:
    case RegexKind::Lazy:
      return first_set(e->left);
    case RegexKind::NegLookahead:
    case RegexKind::PosLookahead:
      return {};
  }
  return {};
}

bool is_length_one(const RegexPtr& e) {
  if (e->kind == RegexKind::Class) return true;
  if (e->kind == RegexKind::Choice)
    return is_length_one(e->left) && is_length_one(e->right);
  return false;
}

bool is_well_formed(const RegexPtr& e) {
  if (!e) return true;
  if (is_repetition(e->kind) && is_nullable(e->left)) return false;
  return is_well_formed(e->left) && is_well_formed(e->right);
}

namespace {

void collect_factors(const RegexPtr& e, std::vector<RegexPtr>& out) {
  if (e->kind == RegexKind::Concat) {
    collect_factors(e->left, out);
    collect_factors(e->right, out);
  } else {
    out.push_back(normalize_concat_right(e));
  }
}

}  // namespace

RegexPtr normalize_concat_right(const RegexPtr& e) {
  if (!e) return e;
  if (e->kind != RegexKind::Concat) {
    RegexPtr l = normalize_concat_right(e->left);
    RegexPtr r = normalize_concat_right(e->right);
    if (l == e->left && r == e->right) return e;
    return std::make_shared<RegexNode>(RegexNode{e->kind, e->cls, std::move(l), std::move(r)});
  }
  std::vector<RegexPtr> parts;
  collect_factors(e, parts);
  RegexPtr acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = rx::concat(parts[i], std::move(acc));
  return acc;
}

}  // namespace repeg
