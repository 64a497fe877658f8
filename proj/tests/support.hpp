#pragma once

// Test-only reference machinery, independent of the code paths it checks.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "repeg/charset.hpp"
#include "repeg/oracle.hpp"
#include "repeg/regex_ast.hpp"

namespace repeg::test {

// Language of an extension-free expression truncated to strings of at most
// max_len symbols, computed by plain set operations. Used to cross-check the
// prefix-set enumerator, never the other way round.
inline std::set<std::string> language_upto(const RegexPtr& e, std::size_t max_len) {
  switch (e->kind) {
    case RegexKind::Empty:
      return {""};
    case RegexKind::Class: {
      std::set<std::string> out;
      if (max_len >= 1)
        for (unsigned char c : e->cls.symbols()) out.insert(std::string(1, c));
      return out;
    }
    case RegexKind::Concat: {
      std::set<std::string> out;
      for (const std::string& a : language_upto(e->left, max_len))
        for (const std::string& b : language_upto(e->right, max_len - a.size()))
          out.insert(a + b);
      return out;
    }
    case RegexKind::Choice: {
      std::set<std::string> out = language_upto(e->left, max_len);
      for (const std::string& b : language_upto(e->right, max_len)) out.insert(b);
      return out;
    }
    case RegexKind::Star: {
      std::set<std::string> out{""};
      std::set<std::string> body = language_upto(e->left, max_len);
      for (;;) {
        std::set<std::string> next = out;
        for (const std::string& a : out)
          for (const std::string& b : body)
            if (a.size() + b.size() <= max_len) next.insert(a + b);
        if (next == out) break;
        out = std::move(next);
      }
      return out;
    }
    default:
      throw std::invalid_argument("language_upto: extension-free patterns only");
  }
}

// Symbols that start some non-empty reference match on any input up to
// max_len; the FIRST set must reproduce this exactly for extension-free
// patterns.
inline CharSet observed_first_symbols(const RegexPtr& e, const Alphabet& alphabet,
                                      std::size_t max_len);

inline std::vector<std::string> strings_upto(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (unsigned char c : alphabet.symbols.symbols()) out.push_back(out[i] + char(c));
    begin = end;
  }
  return out;
}

inline CharSet observed_first_symbols(const RegexPtr& e, const Alphabet& alphabet,
                                      std::size_t max_len) {
  CharSet seen;
  for (const std::string& s : strings_upto(alphabet, max_len)) {
    PrefixSet p = match_prefixes(e, s);
    for (std::size_t n : p.lengths())
      if (n >= 1) seen.add(static_cast<unsigned char>(s[0]));
  }
  return seen;
}

}  // namespace repeg::test
