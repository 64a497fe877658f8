#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repeg/charset.hpp"

namespace repeg {

enum class PegKind : std::uint8_t {
  Empty,        // ()
  Class,        // 'c' or [...]
  Any,          // .
  NonTerminal,  // reference to a production
  Concat,       // p1 p2
  Choice,       // p1 / p2 (ordered)
  Star,         // p*  (possessive)
  Not,          // !p  (&p is !!p)
};

struct PegNode;
using PegPtr = std::shared_ptr<const PegNode>;

struct PegNode {
  PegKind kind;
  CharSet cls;
  std::string name;  // NonTerminal only
  PegPtr left;
  PegPtr right;
};

namespace pe {

PegPtr empty();
PegPtr cls(CharSet set);
PegPtr any();
PegPtr nonterminal(std::string name);
// Collapses ε neighbours; use concat_raw to keep them.
PegPtr concat(PegPtr l, PegPtr r);
PegPtr concat_raw(PegPtr l, PegPtr r);
PegPtr choice(PegPtr l, PegPtr r);
PegPtr star(PegPtr body);
PegPtr negate(PegPtr body);

}  // namespace pe

bool peg_structurally_equal(const PegPtr& a, const PegPtr& b);
std::size_t peg_node_count(const PegPtr& p);

// A grammar: named productions in insertion order plus a starting expression
// over a fixed alphabet. Immutable once built as far as matching is
// concerned; replacing the start yields a derived grammar.
struct Grammar {
  Alphabet alphabet;
  std::vector<std::pair<std::string, PegPtr>> productions;
  PegPtr start;

  const PegPtr* find_production(std::string_view name) const;
  bool defines(std::string_view name) const { return find_production(name) != nullptr; }
  void add_production(std::string name, PegPtr body);

  Grammar with_start(PegPtr p) const {
    Grammar g = *this;
    g.start = std::move(p);
    return g;
  }

  // Total node count over the start expression and all productions.
  std::size_t size() const;
};

bool grammar_equal(const Grammar& a, const Grammar& b);

// Every referenced non-terminal must be defined; returns the first offender
// or the empty string.
std::string find_undefined_reference(const Grammar& g);

}  // namespace repeg
