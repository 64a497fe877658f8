#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "repeg/regex_ast.hpp"

namespace repeg {

struct RegexSyntaxError : std::runtime_error {
  RegexSyntaxError(std::size_t off, const std::string& msg)
      : std::runtime_error("offset " + std::to_string(off) + ": " + msg), offset(off) {}
  std::size_t offset;
};

// Parse the concrete pattern syntax. Metacharacters are ( ) | * + ? . [ ] $ \
// and are escaped with a backslash; `|` binds loosest (left-associative),
// juxtaposition next, postfix operators (* + ? *+ *? ++ +?) tightest.
// Sugar is expanded at parse time: e+ is e e*, e? is e|(), e++ is (?>e e*),
// e+? is e e*?, `.` is the whole alphabet, `$` is (?!.).
RegexPtr parse_regex(std::string_view source, const Alphabet& alphabet);

// Emit the same concrete syntax with minimal parentheses. Parsing the result
// reproduces the tree exactly.
std::string print_regex(const RegexPtr& e, const Alphabet& alphabet);

namespace detail {

// Shared by the pattern and grammar parsers: parses the body of a bracket
// class with `src[start] == '['`, leaves `i` just past the closing bracket.
CharSet parse_bracket_class(std::string_view src, std::size_t& i, const Alphabet& alphabet);

// Canonical [...] rendering (without the brackets) of a byte set; runs of
// three or more collapse to ranges.
std::string class_body_text(const CharSet& set);

}  // namespace detail

}  // namespace repeg
