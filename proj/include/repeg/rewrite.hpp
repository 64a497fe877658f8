#pragma once

#include "repeg/regex_ast.hpp"

namespace repeg {

// Rewrite e into a well-formed expression: no repetition is left with a
// nullable body. Extension-free languages are preserved exactly; patterns
// whose extensions loop on empty matches come out matching a superset.
RegexPtr make_well_formed(const RegexPtr& e);

// Rewrite a nullable, non-trivial expression so it can no longer match the
// empty string while leaving the language of its repetition unchanged.
// Callers must guarantee is_nullable(e) and !matches_only_empty(e); inside a
// repetition nested repetitions are stripped and concatenations become
// choices.
RegexPtr make_non_nullable(const RegexPtr& e);

}  // namespace repeg
