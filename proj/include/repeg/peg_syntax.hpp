#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "repeg/peg.hpp"

namespace repeg {

struct GrammarSyntaxError : std::runtime_error {
  GrammarSyntaxError(std::size_t off, const std::string& msg)
      : std::runtime_error("offset " + std::to_string(off) + ": " + msg), offset(off) {}
  std::size_t offset;
};

// One production per line, `Name <- expr`, LF endings. `/` is ordered choice
// (lowest precedence, left-associative), juxtaposition concatenates, prefix
// `!` binds tighter, postfix `*` tightest. Terminals are 'c' literals (with
// \' and \\ escapes), [...] classes, or `.`; `()` is the empty expression.
// When the start expression is a bare non-terminal its production leads the
// file; otherwise a pseudo-production `START <- expr` does.
std::string grammar_to_text(const Grammar& g);

Grammar parse_grammar(std::string_view text, const Alphabet& alphabet);

}  // namespace repeg
