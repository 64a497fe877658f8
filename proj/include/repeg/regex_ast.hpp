#pragma once

#include <cstdint>
#include <memory>

#include "repeg/charset.hpp"

namespace repeg {

enum class RegexKind : std::uint8_t {
  Empty,         // ()
  Class,         // single symbol or character class
  Concat,        // e1 e2
  Choice,        // e1 | e2
  Star,          // e*
  Atomic,        // (?>e)
  Possessive,    // e*+
  Lazy,          // e*?
  NegLookahead,  // (?!e)
  PosLookahead,  // (?=e)
};

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

// Immutable expression tree; unary nodes keep their body in `left`.
struct RegexNode {
  RegexKind kind;
  CharSet cls;
  RegexPtr left;
  RegexPtr right;
};

namespace rx {

RegexPtr empty();
RegexPtr cls(CharSet set);
RegexPtr chr(unsigned char c);
RegexPtr concat(RegexPtr l, RegexPtr r);
RegexPtr choice(RegexPtr l, RegexPtr r);
RegexPtr star(RegexPtr body);
RegexPtr atomic(RegexPtr body);
RegexPtr possessive(RegexPtr body);
RegexPtr lazy(RegexPtr body);
RegexPtr neg_lookahead(RegexPtr body);
RegexPtr pos_lookahead(RegexPtr body);

}  // namespace rx

bool is_extension(RegexKind k);
bool is_repetition(RegexKind k);  // Star, Possessive, Lazy
bool has_extension(const RegexPtr& e);
bool has_lookahead(const RegexPtr& e);
bool structurally_equal(const RegexPtr& a, const RegexPtr& b);
std::size_t node_count(const RegexPtr& e);

// True iff the language of e is exactly {ε}.
bool matches_only_empty(const RegexPtr& e);

// True iff ε is in the language of e. Conservative for extensions: true for
// everything except atomic groups, which defer to their body.
bool is_nullable(const RegexPtr& e);

// Symbols that can start a non-empty match. Lookaheads contribute nothing;
// atomic groups may yield a superset of the symbols actually consumed.
CharSet first_set(const RegexPtr& e);

// Syntactic check that every match of e consumes exactly one symbol: a class,
// or a choice of such. A false negative only disables an optimization.
bool is_length_one(const RegexPtr& e);

// No repetition node anywhere in e has a nullable body.
bool is_well_formed(const RegexPtr& e);

// Rotate concatenations right: ((ab)c) becomes (a(bc)). Language- and
// translation-invariant; makes `e1* e2` shapes directly visible.
RegexPtr normalize_concat_right(const RegexPtr& e);

}  // namespace repeg
