#include "repeg/regex_syntax.hpp"

#include <vector>

namespace repeg {

namespace {

constexpr std::string_view kMetachars = "()|*+?.[]$\\";

bool is_metachar(unsigned char c) { return kMetachars.find(static_cast<char>(c)) != std::string_view::npos; }

[[noreturn]] void fail(std::size_t off, const std::string& msg) { throw RegexSyntaxError(off, msg); }

class Parser {
 public:
  Parser(std::string_view src, const Alphabet& alpha) : src_(src), alpha_(alpha) {}

  RegexPtr run() {
    RegexPtr e = parse_choice();
    if (i_ != src_.size()) fail(i_, "unexpected '" + std::string(1, src_[i_]) + "'");
    return e;
  }

 private:
  std::string_view src_;
  const Alphabet& alpha_;
  std::size_t i_ = 0;

  bool at_end() const { return i_ >= src_.size(); }
  unsigned char peek() const { return static_cast<unsigned char>(src_[i_]); }
  bool peek_is(char c) const { return !at_end() && src_[i_] == c; }

  void expect(char c, const char* what) {
    if (!peek_is(c)) fail(i_, std::string("expected '") + c + "' " + what);
    ++i_;
  }

  RegexPtr parse_choice() {
    RegexPtr acc = parse_seq();
    while (peek_is('|')) {
      ++i_;
      acc = rx::choice(std::move(acc), parse_seq());
    }
    return acc;
  }

  RegexPtr parse_seq() {
    std::vector<RegexPtr> items;
    while (!at_end() && !peek_is('|') && !peek_is(')')) items.push_back(parse_postfix());
    if (items.empty()) return rx::empty();
    RegexPtr acc = items.back();
    for (std::size_t k = items.size() - 1; k-- > 0;) acc = rx::concat(items[k], std::move(acc));
    return acc;
  }

  RegexPtr parse_postfix() {
    RegexPtr e = parse_primary();
    for (;;) {
      if (peek_is('*')) {
        ++i_;
        if (peek_is('+')) {
          ++i_;
          e = rx::possessive(std::move(e));
        } else if (peek_is('?')) {
          ++i_;
          e = rx::lazy(std::move(e));
        } else {
          e = rx::star(std::move(e));
        }
      } else if (peek_is('+')) {
        ++i_;
        if (peek_is('+')) {
          ++i_;
          e = rx::atomic(rx::concat(e, rx::star(e)));
        } else if (peek_is('?')) {
          ++i_;
          e = rx::concat(e, rx::lazy(e));
        } else {
          e = rx::concat(e, rx::star(e));
        }
      } else if (peek_is('?')) {
        ++i_;
        e = rx::choice(std::move(e), rx::empty());
      } else {
        break;
      }
    }
    return e;
  }

  RegexPtr literal(unsigned char c, std::size_t at) {
    if (!alpha_.contains(c)) fail(at, "symbol outside the alphabet");
    return rx::chr(c);
  }

  RegexPtr parse_primary() {
    if (at_end()) fail(i_, "unexpected end of pattern");
    std::size_t at = i_;
    unsigned char c = peek();
    switch (c) {
      case '(': {
        ++i_;
        if (peek_is(')')) {
          ++i_;
          return rx::empty();
        }
        if (peek_is('?')) {
          ++i_;
          if (at_end()) fail(i_, "unterminated group");
          char g = src_[i_++];
          RegexPtr body;
          switch (g) {
            case '>':
              body = parse_choice();
              expect(')', "to close group");
              return rx::atomic(std::move(body));
            case '!':
              body = parse_choice();
              expect(')', "to close group");
              return rx::neg_lookahead(std::move(body));
            case '=':
              body = parse_choice();
              expect(')', "to close group");
              return rx::pos_lookahead(std::move(body));
            default:
              fail(i_ - 1, "unknown group kind (expected ?> ?! or ?=)");
          }
        }
        RegexPtr body = parse_choice();
        expect(')', "to close group");
        return body;
      }
      case '[': {
        CharSet set = detail::parse_bracket_class(src_, i_, alpha_);
        return rx::cls(set);
      }
      case '.':
        ++i_;
        return rx::cls(alpha_.symbols);
      case '$':
        ++i_;
        return rx::neg_lookahead(rx::cls(alpha_.symbols));
      case '\\': {
        ++i_;
        if (at_end()) fail(i_, "dangling escape");
        unsigned char esc = peek();
        if (!is_metachar(esc)) fail(i_, "invalid escape (only metacharacters may be escaped)");
        ++i_;
        return literal(esc, at);
      }
      case ')':
      case '|':
      case '*':
      case '+':
      case '?':
      case ']':
        fail(i_, std::string("unexpected '") + static_cast<char>(c) + "'");
      default:
        ++i_;
        return literal(c, at);
    }
  }
};

// Precedence levels for printing. A child is parenthesized when its level is
// below what its context requires.
enum Level : int { kChoice = 0, kConcat = 1, kPostfix = 2, kPrimary = 3 };

int level_of(const RegexNode& e, const Alphabet& alpha) {
  switch (e.kind) {
    case RegexKind::Choice:
      return kChoice;
    case RegexKind::Concat:
      return kConcat;
    case RegexKind::Star:
    case RegexKind::Possessive:
    case RegexKind::Lazy:
      return kPostfix;
    case RegexKind::Class:
      // multi-char classes print as atoms; single chars may need escaping but
      // are still atomic
      (void)alpha;
      return kPrimary;
    default:
      return kPrimary;  // (), (?>..), (?!..), (?=..)
  }
}

void print_rec(const RegexPtr& e, const Alphabet& alpha, int min_level, std::string& out);

void print_child(const RegexPtr& e, const Alphabet& alpha, int min_level, std::string& out) {
  if (level_of(*e, alpha) < min_level) {
    out += '(';
    print_rec(e, alpha, kChoice, out);
    out += ')';
  } else {
    print_rec(e, alpha, min_level, out);
  }
}

void print_class(const CharSet& set, const Alphabet& alpha, std::string& out) {
  if (set == alpha.symbols) {
    out += '.';
    return;
  }
  if (set.is_singleton()) {
    unsigned char c = set.symbols()[0];
    if (is_metachar(c)) out += '\\';
    out += static_cast<char>(c);
    return;
  }
  out += '[';
  out += detail::class_body_text(set);
  out += ']';
}

void print_rec(const RegexPtr& e, const Alphabet& alpha, int min_level, std::string& out) {
  switch (e->kind) {
    case RegexKind::Empty:
      out += "()";
      return;
    case RegexKind::Class:
      print_class(e->cls, alpha, out);
      return;
    case RegexKind::Concat:
      print_child(e->left, alpha, kPostfix, out);
      // right side may be a concat chain; deeper choices still need parens
      print_child(e->right, alpha, kConcat, out);
      return;
    case RegexKind::Choice:
      print_child(e->left, alpha, kChoice, out);
      out += '|';
      print_child(e->right, alpha, kConcat, out);
      return;
    case RegexKind::Star:
      print_child(e->left, alpha, kPrimary, out);
      out += '*';
      return;
    case RegexKind::Possessive:
      print_child(e->left, alpha, kPrimary, out);
      out += "*+";
      return;
    case RegexKind::Lazy:
      print_child(e->left, alpha, kPrimary, out);
      out += "*?";
      return;
    case RegexKind::Atomic:
      out += "(?>";
      print_rec(e->left, alpha, kChoice, out);
      out += ')';
      return;
    case RegexKind::NegLookahead:
      out += "(?!";
      print_rec(e->left, alpha, kChoice, out);
      out += ')';
      return;
    case RegexKind::PosLookahead:
      out += "(?=";
      print_rec(e->left, alpha, kChoice, out);
      out += ')';
      return;
  }
}

}  // namespace

RegexPtr parse_regex(std::string_view source, const Alphabet& alphabet) {
  return Parser(source, alphabet).run();
}

std::string print_regex(const RegexPtr& e, const Alphabet& alphabet) {
  std::string out;
  print_rec(e, alphabet, kChoice, out);
  return out;
}

namespace detail {

namespace {

// Characters that must be escaped inside a bracket class.
bool class_special(unsigned char c) { return c == ']' || c == '\\' || c == '^' || c == '-'; }

unsigned char class_char(std::string_view src, std::size_t& i) {
  unsigned char c = static_cast<unsigned char>(src[i]);
  if (c == '\\') {
    ++i;
    if (i >= src.size()) fail(i, "dangling escape in class");
    unsigned char esc = static_cast<unsigned char>(src[i]);
    if (!class_special(esc) && !is_metachar(esc)) fail(i, "invalid escape in class");
    ++i;
    return esc;
  }
  ++i;
  return c;
}

}  // namespace

CharSet parse_bracket_class(std::string_view src, std::size_t& i, const Alphabet& alphabet) {
  std::size_t open = i;
  ++i;  // consume '['
  bool complement = false;
  if (i < src.size() && src[i] == '^') {
    complement = true;
    ++i;
  }
  CharSet set;
  bool first_item = true;
  while (true) {
    if (i >= src.size()) fail(open, "unterminated class");
    if (src[i] == ']' && !first_item) break;
    std::size_t at = i;
    unsigned char lo = class_char(src, i);
    if (i + 1 < src.size() && src[i] == '-' && src[i + 1] != ']') {
      ++i;
      std::size_t hi_at = i;
      unsigned char hi = class_char(src, i);
      if (hi < lo) fail(hi_at, "class range out of order");
      for (unsigned v = lo; v <= hi; ++v) {
        if (!alphabet.contains(static_cast<unsigned char>(v))) fail(at, "class symbol outside the alphabet");
        set.add(static_cast<unsigned char>(v));
      }
    } else {
      if (!alphabet.contains(lo)) fail(at, "class symbol outside the alphabet");
      set.add(lo);
    }
    first_item = false;
  }
  ++i;  // consume ']'
  if (complement) set = set.complement_within(alphabet.symbols);
  if (set.empty()) fail(open, "class matches no symbol of the alphabet");
  return set;
}

std::string class_body_text(const CharSet& set) {
  std::string out;
  auto emit = [&out](unsigned char c) {
    if (class_special(c)) out += '\\';
    out += static_cast<char>(c);
  };
  std::vector<unsigned char> syms = set.symbols();
  std::size_t i = 0;
  while (i < syms.size()) {
    std::size_t j = i;
    while (j + 1 < syms.size() && syms[j + 1] == syms[j] + 1) ++j;
    if (j - i >= 2) {
      emit(syms[i]);
      out += '-';
      emit(syms[j]);
    } else {
      for (std::size_t k = i; k <= j; ++k) emit(syms[k]);
    }
    i = j + 1;
  }
  return out;
}

}  // namespace detail

}  // namespace repeg
