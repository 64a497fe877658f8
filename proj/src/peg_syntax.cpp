#include "repeg/peg_syntax.hpp"

#include <cctype>
#include <vector>

#include "repeg/regex_syntax.hpp"

namespace repeg {

namespace {

enum Level : int { kChoice = 0, kConcat = 1, kPrefix = 2, kPostfix = 3, kPrimary = 4 };

int level_of(const PegNode& p) {
  switch (p.kind) {
    case PegKind::Choice:
      return kChoice;
    case PegKind::Concat:
      return kConcat;
    case PegKind::Not:
      return kPrefix;
    case PegKind::Star:
      return kPostfix;
    default:
      return kPrimary;
  }
}

void print_expr(const PegPtr& p, std::string& out, int min_level);

void print_child(const PegPtr& p, std::string& out, int min_level) {
  if (level_of(*p) < min_level) {
    out += '(';
    print_expr(p, out, kChoice);
    out += ')';
  } else {
    print_expr(p, out, min_level);
  }
}

void print_expr(const PegPtr& p, std::string& out, int min_level) {
  switch (p->kind) {
    case PegKind::Empty:
      out += "()";
      return;
    case PegKind::Any:
      out += '.';
      return;
    case PegKind::NonTerminal:
      out += p->name;
      return;
    case PegKind::Class: {
      if (p->cls.is_singleton()) {
        unsigned char c = p->cls.symbols()[0];
        out += '\'';
        if (c == '\'' || c == '\\') out += '\\';
        out += static_cast<char>(c);
        out += '\'';
        return;
      }
      out += '[';
      out += detail::class_body_text(p->cls);
      out += ']';
      return;
    }
    case PegKind::Concat:
      print_child(p->left, out, kPrefix);
      out += ' ';
      print_child(p->right, out, kConcat);
      return;
    case PegKind::Choice:
      print_child(p->left, out, kChoice);
      out += " / ";
      print_child(p->right, out, kConcat);
      return;
    case PegKind::Star:
      print_child(p->left, out, kPrimary);
      out += '*';
      return;
    case PegKind::Not:
      out += '!';
      print_child(p->left, out, kPrefix);
      return;
  }
}

std::string render(const PegPtr& p) {
  std::string out;
  print_expr(p, out, kChoice);
  return out;
}

bool name_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool name_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

class GrammarParser {
 public:
  GrammarParser(std::string_view text, const Alphabet& alpha) : text_(text), alpha_(alpha) {}

  Grammar run() {
    Grammar g;
    g.alphabet = alpha_;
    std::vector<std::pair<std::string, PegPtr>> prods;
    while (i_ < text_.size()) {
      skip_blank_lines();
      if (i_ >= text_.size()) break;
      std::string name = parse_name();
      skip_spaces();
      if (!match_token("<-")) fail(i_, "expected '<-'");
      skip_spaces();
      PegPtr body = parse_choice();
      skip_spaces();
      if (i_ < text_.size()) {
        if (text_[i_] != '\n') fail(i_, "expected end of line");
        ++i_;
      }
      for (const auto& [n, b] : prods)
        if (n == name) fail(i_, "duplicate production: " + name);
      prods.emplace_back(std::move(name), std::move(body));
    }
    if (prods.empty()) fail(0, "empty grammar");
    if (prods.front().first == "START") {
      g.start = prods.front().second;
      prods.erase(prods.begin());
    } else {
      g.start = pe::nonterminal(prods.front().first);
    }
    g.productions = std::move(prods);
    std::string bad = find_undefined_reference(g);
    if (!bad.empty()) fail(i_, "undefined non-terminal: " + bad);
    return g;
  }

 private:
  std::string_view text_;
  const Alphabet& alpha_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(std::size_t off, const std::string& msg) {
    throw GrammarSyntaxError(off, msg);
  }

  void skip_spaces() {
    while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t')) ++i_;
  }

  void skip_blank_lines() {
    while (i_ < text_.size()) {
      skip_spaces();
      if (i_ < text_.size() && text_[i_] == '\n') {
        ++i_;
        continue;
      }
      break;
    }
  }

  bool match_token(std::string_view tok) {
    if (text_.substr(i_, tok.size()) != tok) return false;
    i_ += tok.size();
    return true;
  }

  bool at_expr_end() {
    return i_ >= text_.size() || text_[i_] == '\n' || text_[i_] == ')' || text_[i_] == '/';
  }

  std::string parse_name() {
    if (i_ >= text_.size() || !name_start(static_cast<unsigned char>(text_[i_])))
      fail(i_, "expected a non-terminal name");
    std::size_t start = i_;
    while (i_ < text_.size() && name_char(static_cast<unsigned char>(text_[i_]))) ++i_;
    return std::string(text_.substr(start, i_ - start));
  }

  PegPtr parse_choice() {
    PegPtr acc = parse_seq();
    skip_spaces();
    while (i_ < text_.size() && text_[i_] == '/') {
      ++i_;
      skip_spaces();
      acc = pe::choice(std::move(acc), parse_seq());
      skip_spaces();
    }
    return acc;
  }

  PegPtr parse_seq() {
    std::vector<PegPtr> items;
    for (;;) {
      skip_spaces();
      if (at_expr_end()) break;
      items.push_back(parse_prefix());
    }
    if (items.empty()) fail(i_, "expected an expression (use () for the empty one)");
    PegPtr acc = items.back();
    for (std::size_t k = items.size() - 1; k-- > 0;) acc = pe::concat_raw(items[k], std::move(acc));
    return acc;
  }

  PegPtr parse_prefix() {
    if (i_ < text_.size() && text_[i_] == '!') {
      ++i_;
      skip_spaces();
      return pe::negate(parse_prefix());
    }
    return parse_postfix();
  }

  PegPtr parse_postfix() {
    PegPtr p = parse_primary();
    while (i_ < text_.size() && text_[i_] == '*') {
      ++i_;
      p = pe::star(std::move(p));
    }
    return p;
  }

  PegPtr parse_primary() {
    if (i_ >= text_.size()) fail(i_, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(text_[i_]);
    switch (c) {
      case '(': {
        ++i_;
        skip_spaces();
        if (i_ < text_.size() && text_[i_] == ')') {
          ++i_;
          return pe::empty();
        }
        PegPtr body = parse_choice();
        skip_spaces();
        if (i_ >= text_.size() || text_[i_] != ')') fail(i_, "expected ')'");
        ++i_;
        return body;
      }
      case '\'': {
        std::size_t at = i_;
        ++i_;
        if (i_ >= text_.size()) fail(at, "unterminated literal");
        unsigned char ch = static_cast<unsigned char>(text_[i_]);
        if (ch == '\\') {
          ++i_;
          if (i_ >= text_.size()) fail(at, "unterminated literal");
          ch = static_cast<unsigned char>(text_[i_]);
          if (ch != '\'' && ch != '\\') fail(i_, "invalid escape in literal");
        } else if (ch == '\'') {
          fail(at, "empty literal");
        }
        ++i_;
        if (i_ >= text_.size() || text_[i_] != '\'') fail(i_, "expected closing quote");
        ++i_;
        if (!alpha_.contains(ch)) fail(at, "literal outside the alphabet");
        return pe::cls(CharSet::single(ch));
      }
      case '[': {
        CharSet set = detail::parse_bracket_class(text_, i_, alpha_);
        return pe::cls(set);
      }
      case '.':
        ++i_;
        return pe::any();
      default:
        if (name_start(c)) return pe::nonterminal(parse_name());
        fail(i_, std::string("unexpected '") + static_cast<char>(c) + "'");
    }
  }
};

}  // namespace

std::string grammar_to_text(const Grammar& g) {
  std::string out;
  bool bare_start = g.start->kind == PegKind::NonTerminal && g.defines(g.start->name);
  std::string lead;
  if (bare_start) {
    lead = g.start->name;
    out += lead;
    out += " <- ";
    out += render(*g.find_production(lead));
    out += '\n';
  } else {
    out += "START <- ";
    out += render(g.start);
    out += '\n';
  }
  for (const auto& [name, body] : g.productions) {
    if (bare_start && name == lead) continue;
    out += name;
    out += " <- ";
    out += render(body);
    out += '\n';
  }
  return out;
}

Grammar parse_grammar(std::string_view text, const Alphabet& alphabet) {
  return GrammarParser(text, alphabet).run();
}

}  // namespace repeg
