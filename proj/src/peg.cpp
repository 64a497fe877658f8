#include "repeg/peg.hpp"

#include <cassert>
#include <stdexcept>

namespace repeg {

namespace pe {

namespace {

PegPtr make(PegKind kind, CharSet set, std::string name, PegPtr l, PegPtr r) {
  return std::make_shared<PegNode>(
      PegNode{kind, set, std::move(name), std::move(l), std::move(r)});
}

}  // namespace

PegPtr empty() { return make(PegKind::Empty, {}, {}, nullptr, nullptr); }

PegPtr cls(CharSet set) {
  assert(!set.empty());
  return make(PegKind::Class, set, {}, nullptr, nullptr);
}

PegPtr any() { return make(PegKind::Any, {}, {}, nullptr, nullptr); }

PegPtr nonterminal(std::string name) {
  return make(PegKind::NonTerminal, {}, std::move(name), nullptr, nullptr);
}

PegPtr concat(PegPtr l, PegPtr r) {
  if (l->kind == PegKind::Empty) return r;
  if (r->kind == PegKind::Empty) return l;
  return concat_raw(std::move(l), std::move(r));
}

PegPtr concat_raw(PegPtr l, PegPtr r) {
  return make(PegKind::Concat, {}, {}, std::move(l), std::move(r));
}

PegPtr choice(PegPtr l, PegPtr r) {
  return make(PegKind::Choice, {}, {}, std::move(l), std::move(r));
}

PegPtr star(PegPtr body) { return make(PegKind::Star, {}, {}, std::move(body), nullptr); }

PegPtr negate(PegPtr body) { return make(PegKind::Not, {}, {}, std::move(body), nullptr); }

}  // namespace pe

bool peg_structurally_equal(const PegPtr& a, const PegPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == PegKind::Class && !(a->cls == b->cls)) return false;
  if (a->kind == PegKind::NonTerminal && a->name != b->name) return false;
  return peg_structurally_equal(a->left, b->left) && peg_structurally_equal(a->right, b->right);
}

std::size_t peg_node_count(const PegPtr& p) {
  if (!p) return 0;
  return 1 + peg_node_count(p->left) + peg_node_count(p->right);
}

const PegPtr* Grammar::find_production(std::string_view name) const {
  for (const auto& [n, body] : productions)
    if (n == name) return &body;
  return nullptr;
}

void Grammar::add_production(std::string name, PegPtr body) {
  if (defines(name)) throw std::logic_error("duplicate production: " + name);
  productions.emplace_back(std::move(name), std::move(body));
}

std::size_t Grammar::size() const {
  std::size_t n = peg_node_count(start);
  for (const auto& [name, body] : productions) n += peg_node_count(body);
  return n;
}

bool grammar_equal(const Grammar& a, const Grammar& b) {
  if (!(a.alphabet == b.alphabet)) return false;
  if (a.productions.size() != b.productions.size()) return false;
  for (std::size_t i = 0; i < a.productions.size(); ++i) {
    if (a.productions[i].first != b.productions[i].first) return false;
    if (!peg_structurally_equal(a.productions[i].second, b.productions[i].second)) return false;
  }
  return peg_structurally_equal(a.start, b.start);
}

namespace {

void check_refs(const Grammar& g, const PegPtr& p, std::string& bad) {
  if (!p || !bad.empty()) return;
  if (p->kind == PegKind::NonTerminal && !g.defines(p->name)) {
    bad = p->name;
    return;
  }
  check_refs(g, p->left, bad);
  check_refs(g, p->right, bad);
}

}  // namespace

std::string find_undefined_reference(const Grammar& g) {
  std::string bad;
  check_refs(g, g.start, bad);
  for (const auto& [name, body] : g.productions) check_refs(g, body, bad);
  return bad;
}

}  // namespace repeg
