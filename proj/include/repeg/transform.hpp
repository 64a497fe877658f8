#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "repeg/peg.hpp"
#include "repeg/regex_ast.hpp"

namespace repeg {

struct NotWellFormedError : std::runtime_error {
  explicit NotWellFormedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fresh non-terminal names A0, A1, ...; one supply is threaded through a
// whole compilation so names never collide across sub-transformations.
class NameSupply {
 public:
  std::string next() { return "A" + std::to_string(counter_++); }

  template <typename DefinedFn>
  std::string fresh(DefinedFn&& defined) {
    for (;;) {
      std::string name = next();
      if (!defined(name)) return name;
    }
  }

  std::string fresh(const Grammar& g) {
    return fresh([&g](const std::string& n) { return g.defines(n); });
  }

 private:
  std::uint64_t counter_ = 0;
};

struct TransformOptions {
  // Turn `e1* e2` into a possessive or predicated repetition when that is
  // provably outcome-preserving.
  bool optimize_repetition = true;
};

// Translate e against a continuation grammar: the result matches e followed
// by whatever the continuation matches. e must be well-formed, otherwise the
// resulting grammar would not be complete.
Grammar transform(const RegexPtr& e, Grammar continuation, NameSupply& names,
                  const TransformOptions& opts = {});

// The specialized translation of Concat(Star(rep_body), tail): a possessive
// repetition when the two FIRST sets are disjoint, otherwise a repetition
// guarded by a negative lookahead on FIRST(tail).
Grammar transform_star_concat(const RegexPtr& rep_body, const RegexPtr& tail,
                              Grammar continuation, NameSupply& names,
                              const TransformOptions& opts = {});

struct CompileOptions {
  bool rewrite = true;              // run the well-formedness rewriting first
  bool optimize_repetition = true;  // apply the repetition optimization
};

// End-to-end pipeline: rewrite (or verify well-formedness), right-normalize
// concatenations, translate against the empty continuation.
Grammar compile(const RegexPtr& e, const Alphabet& alphabet, const CompileOptions& opts = {});

}  // namespace repeg
