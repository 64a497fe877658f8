#include "repeg/oracle.hpp"

#include <bit>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace repeg {

std::size_t PrefixSet::count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> PrefixSet::lengths() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

namespace {

void index_nodes(const RegexNode* e, std::unordered_map<const RegexNode*, std::size_t>& ids) {
  if (!e || ids.count(e)) return;
  ids.emplace(e, ids.size());
  index_nodes(e->left.get(), ids);
  index_nodes(e->right.get(), ids);
}

class PrefixEnumerator {
 public:
  PrefixEnumerator(const RegexPtr& root, std::string_view in) : in_(in) {
    index_nodes(root.get(), ids_);
    width_ = in.size() + 1;
    memo_.assign(ids_.size() * width_, 0);
    done_.assign(ids_.size() * width_, 0);
  }

  std::uint64_t eval(const RegexNode* e, std::size_t pos) {
    std::size_t slot = ids_.at(e) * width_ + pos;
    if (done_[slot]) return memo_[slot];
    std::uint64_t result = 0;
    switch (e->kind) {
      case RegexKind::Empty:
        result = bit(pos);
        break;
      case RegexKind::Class:
        if (pos < in_.size() && e->cls.test(static_cast<unsigned char>(in_[pos])))
          result = bit(pos + 1);
        break;
      case RegexKind::Concat:
        for (std::uint64_t b = eval(e->left.get(), pos); b != 0; b &= b - 1)
          result |= eval(e->right.get(), static_cast<std::size_t>(std::countr_zero(b)));
        break;
      case RegexKind::Choice:
        result = eval(e->left.get(), pos) | eval(e->right.get(), pos);
        break;
      case RegexKind::Star:
        // stopping here is always allowed; a further step must consume input
        result = bit(pos);
        for (std::uint64_t b = eval(e->left.get(), pos); b != 0; b &= b - 1) {
          std::size_t next = static_cast<std::size_t>(std::countr_zero(b));
          if (next > pos) result |= eval(e, next);
        }
        break;
      default:
        assert(false && "extension node in prefix enumeration");
        break;
    }
    memo_[slot] = result;
    done_[slot] = 1;
    return result;
  }

 private:
  static std::uint64_t bit(std::size_t n) { return std::uint64_t{1} << n; }

  std::string_view in_;
  std::size_t width_;
  std::unordered_map<const RegexNode*, std::size_t> ids_;
  std::vector<std::uint64_t> memo_;
  std::vector<std::uint8_t> done_;
};

struct FuelStop {};

// Unrestricted backtracking with explicit success continuations. Fuel and a
// recursion-depth bound both surface as FuelExhausted; the depth bound keeps
// empty-loop patterns from overflowing the stack before the fuel runs out.
class Backtracker {
 public:
  Backtracker(std::string_view in, std::uint64_t fuel) : in_(in), fuel_(fuel) {}

  using Cont = std::function<bool(std::size_t)>;

  bool run(const RegexNode* e, std::size_t pos, const Cont& k) {
    if (fuel_ == 0) throw FuelStop{};
    --fuel_;
    if (++depth_ > kMaxDepth) throw FuelStop{};
    struct Guard {
      std::uint32_t& d;
      ~Guard() { --d; }
    } guard{depth_};

    switch (e->kind) {
      case RegexKind::Empty:
        return k(pos);
      case RegexKind::Class:
        return pos < in_.size() && e->cls.test(static_cast<unsigned char>(in_[pos])) &&
               k(pos + 1);
      case RegexKind::Concat:
        return run(e->left.get(), pos,
                   [&](std::size_t p) { return run(e->right.get(), p, k); });
      case RegexKind::Choice:
        return run(e->left.get(), pos, k) || run(e->right.get(), pos, k);
      case RegexKind::Star:
        // greedy: one more iteration first, stop only when that cannot lead
        // to a full match
        return run(e->left.get(), pos, [&](std::size_t p) { return run(e, p, k); }) ||
               k(pos);
      case RegexKind::Lazy:
        return k(pos) ||
               run(e->left.get(), pos, [&](std::size_t p) { return run(e, p, k); });
      case RegexKind::Atomic: {
        std::size_t committed = 0;
        bool found = run(e->left.get(), pos, [&](std::size_t p) {
          committed = p;
          return true;
        });
        return found && k(committed);
      }
      case RegexKind::NegLookahead: {
        bool hit = run(e->left.get(), pos, [](std::size_t) { return true; });
        return !hit && k(pos);
      }
      case RegexKind::PosLookahead: {
        bool hit = run(e->left.get(), pos, [](std::size_t) { return true; });
        return hit && k(pos);
      }
      case RegexKind::Possessive:
        assert(false && "possessive nodes are rewritten before matching");
        return false;
    }
    return false;
  }

 private:
  static constexpr std::uint32_t kMaxDepth = 20'000;

  std::string_view in_;
  std::uint64_t fuel_;
  std::uint32_t depth_ = 0;
};

// e*+ behaves exactly like (?>e*); matching on the rewritten tree keeps the
// matcher to one repetition rule.
RegexPtr desugar_possessive(const RegexPtr& e) {
  if (!e) return e;
  RegexPtr l = desugar_possessive(e->left);
  RegexPtr r = desugar_possessive(e->right);
  if (e->kind == RegexKind::Possessive) return rx::atomic(rx::star(std::move(l)));
  if (l == e->left && r == e->right) return e;
  return std::make_shared<RegexNode>(RegexNode{e->kind, e->cls, std::move(l), std::move(r)});
}

}  // namespace

PrefixSet match_prefixes(const RegexPtr& e, std::string_view input) {
  if (has_extension(e))
    throw std::invalid_argument("match_prefixes: extension nodes are not supported");
  if (input.size() > PrefixSet::kMaxInput)
    throw std::invalid_argument("match_prefixes: input longer than 63 symbols");
  PrefixEnumerator en(e, input);
  return PrefixSet(en.eval(e.get(), 0));
}

MatchOutcome backtrack_match(const RegexPtr& e, std::string_view input, std::uint64_t fuel) {
  RegexPtr pattern = desugar_possessive(e);
  Backtracker bt(input, fuel);
  std::size_t end = 0;
  try {
    bool ok = bt.run(pattern.get(), 0, [&](std::size_t p) {
      end = p;
      return true;
    });
    return ok ? MatchOutcome::matched(end) : MatchOutcome::fail();
  } catch (const FuelStop&) {
    return MatchOutcome::fuel_exhausted();
  }
}

}  // namespace repeg
