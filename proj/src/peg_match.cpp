#include "repeg/peg_match.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace repeg {

namespace {

enum class FrameKind : std::uint8_t { Seq, Alt, Star, Not };

struct Frame {
  FrameKind kind;
  const PegNode* node;  // Seq/Alt: pending right side; Star: body
  std::size_t pos;      // Alt/Not: saved position; Star: position after the
                        // last completed iteration
};

enum class Sig : std::uint8_t { Eval, Good, Bad };

// (![F] .) succeeds at pos iff the symbol is outside F and inside the
// alphabet; ([C]) iff inside C. Both shapes drive a repetition as one scan.
struct ScanShape {
  bool valid = false;
  const CharSet* keep_out = nullptr;  // from the guarding !-class, may be null
  const CharSet* keep_in = nullptr;   // from the consuming class, may be null (= Any)
};

ScanShape scan_shape(const PegNode* star) {
  const PegNode* body = star->left.get();
  ScanShape s;
  if (body->kind == PegKind::Class) {
    s.valid = true;
    s.keep_in = &body->cls;
    return s;
  }
  if (body->kind == PegKind::Concat && body->left->kind == PegKind::Not &&
      body->left->left->kind == PegKind::Class) {
    const PegNode* consumer = body->right.get();
    if (consumer->kind == PegKind::Any) {
      s.valid = true;
      s.keep_out = &body->left->left->cls;
      return s;
    }
    if (consumer->kind == PegKind::Class) {
      s.valid = true;
      s.keep_out = &body->left->left->cls;
      s.keep_in = &consumer->cls;
      return s;
    }
  }
  return s;
}

}  // namespace

PegMatcher::PegMatcher(const Grammar& g) : g_(g) {
  for (const auto& [name, body] : g.productions) bodies_.emplace(name, body.get());
  std::string bad = find_undefined_reference(g);
  if (!bad.empty()) throw std::logic_error("grammar references undefined non-terminal: " + bad);
}

MatchOutcome PegMatcher::match(std::string_view in, const MatchOptions& opts) const {
  const std::size_t n = in.size();
  std::uint64_t fuel = opts.fuel;
  std::vector<Frame> frames;
  frames.reserve(64);

  const PegNode* node = g_.start.get();
  std::size_t pos = 0;
  Sig sig = Sig::Eval;

  auto in_alphabet = [&](std::size_t p) {
    return g_.alphabet.contains(static_cast<unsigned char>(in[p]));
  };

  for (;;) {
    if (sig == Sig::Eval) {
      if (fuel == 0) {
        if (opts.stats) {
          opts.stats->fuel_used = opts.fuel;
          opts.stats->max_frames = std::max(opts.stats->max_frames, frames.size());
        }
        return MatchOutcome::fuel_exhausted();
      }
      --fuel;
      if (opts.stats) opts.stats->max_frames = std::max(opts.stats->max_frames, frames.size() + 1);

      switch (node->kind) {
        case PegKind::Empty:
          sig = Sig::Good;
          break;
        case PegKind::Class:
          if (pos < n && node->cls.test(static_cast<unsigned char>(in[pos]))) {
            ++pos;
            sig = Sig::Good;
          } else {
            sig = Sig::Bad;
          }
          break;
        case PegKind::Any:
          if (pos < n && in_alphabet(pos)) {
            ++pos;
            sig = Sig::Good;
          } else {
            sig = Sig::Bad;
          }
          break;
        case PegKind::NonTerminal:
          // tail position: the production's result is this node's result
          node = bodies_.find(node->name)->second;
          continue;
        case PegKind::Concat:
          frames.push_back({FrameKind::Seq, node->right.get(), 0});
          node = node->left.get();
          continue;
        case PegKind::Choice:
          frames.push_back({FrameKind::Alt, node->right.get(), pos});
          node = node->left.get();
          continue;
        case PegKind::Star: {
          if (opts.scan_fast_paths) {
            ScanShape s = scan_shape(node);
            if (s.valid) {
              std::size_t start = pos;
              while (pos < n &&
                     (!s.keep_out || !s.keep_out->test(static_cast<unsigned char>(in[pos]))) &&
                     (s.keep_in ? s.keep_in->test(static_cast<unsigned char>(in[pos]))
                                : in_alphabet(pos)))
                ++pos;
              std::uint64_t spent = pos - start;
              fuel -= spent < fuel ? spent : fuel;
              sig = Sig::Good;
              break;
            }
          }
          frames.push_back({FrameKind::Star, node->left.get(), pos});
          node = node->left.get();
          continue;
        }
        case PegKind::Not:
          frames.push_back({FrameKind::Not, nullptr, pos});
          node = node->left.get();
          continue;
      }
      // fall through with a Good/Bad verdict
    }

    if (frames.empty()) {
      if (opts.stats) opts.stats->fuel_used = opts.fuel - fuel;
      return sig == Sig::Good ? MatchOutcome::matched(pos) : MatchOutcome::fail();
    }

    Frame& f = frames.back();
    if (sig == Sig::Good) {
      switch (f.kind) {
        case FrameKind::Seq:
          node = f.node;
          frames.pop_back();
          sig = Sig::Eval;
          break;
        case FrameKind::Alt:
          frames.pop_back();  // committed; propagate success
          break;
        case FrameKind::Star:
          f.pos = pos;  // iteration done, go again
          node = f.node;
          sig = Sig::Eval;
          break;
        case FrameKind::Not:
          pos = f.pos;
          frames.pop_back();
          sig = Sig::Bad;
          break;
      }
    } else {
      switch (f.kind) {
        case FrameKind::Seq:
          frames.pop_back();  // propagate failure
          break;
        case FrameKind::Alt:
          pos = f.pos;
          node = f.node;
          frames.pop_back();
          sig = Sig::Eval;
          break;
        case FrameKind::Star:
          pos = f.pos;  // failed iteration consumed nothing overall
          frames.pop_back();
          sig = Sig::Good;
          break;
        case FrameKind::Not:
          pos = f.pos;
          frames.pop_back();
          sig = Sig::Good;
          break;
      }
    }
  }
}

MatchOutcome peg_match(const Grammar& g, std::string_view input, const MatchOptions& opts) {
  return PegMatcher(g).match(input, opts);
}

MatchOutcome peg_match(const Grammar& g, std::string_view input, std::uint64_t fuel) {
  MatchOptions opts;
  opts.fuel = fuel;
  return PegMatcher(g).match(input, opts);
}

namespace {

// Abstract outcomes for the completeness analysis.
constexpr std::uint8_t kSuccEmpty = 1;    // can succeed consuming nothing
constexpr std::uint8_t kSuccConsume = 2;  // can succeed consuming input
constexpr std::uint8_t kFail = 4;

class Completeness {
 public:
  explicit Completeness(const Grammar& g) : g_(g) {
    for (const auto& [name, body] : g.productions) out_[name] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [name, body] : g_.productions) {
        std::uint8_t next = eval(body.get());
        if (next != out_[name]) {
          out_[name] = next;
          changed = true;
        }
      }
    }
  }

  std::uint8_t eval(const PegNode* p) const {
    switch (p->kind) {
      case PegKind::Empty:
        return kSuccEmpty;
      case PegKind::Class:
      case PegKind::Any:
        return kSuccConsume | kFail;
      case PegKind::NonTerminal: {
        auto it = out_.find(p->name);
        return it == out_.end() ? 0 : it->second;
      }
      case PegKind::Concat: {
        std::uint8_t l = eval(p->left.get());
        std::uint8_t r = eval(p->right.get());
        std::uint8_t o = 0;
        if ((l & kSuccEmpty) && (r & kSuccEmpty)) o |= kSuccEmpty;
        if ((l & kSuccConsume) && (r & (kSuccEmpty | kSuccConsume))) o |= kSuccConsume;
        if ((l & kSuccEmpty) && (r & kSuccConsume)) o |= kSuccConsume;
        if (l & kFail) o |= kFail;
        if ((l & (kSuccEmpty | kSuccConsume)) && (r & kFail)) o |= kFail;
        return o;
      }
      case PegKind::Choice: {
        std::uint8_t l = eval(p->left.get());
        std::uint8_t r = eval(p->right.get());
        std::uint8_t o = l & (kSuccEmpty | kSuccConsume);
        if (l & kFail) o |= r;
        return o;
      }
      case PegKind::Star: {
        // a repetition only ever returns through a failing iteration
        std::uint8_t b = eval(p->left.get());
        std::uint8_t o = 0;
        if (b & kFail) o |= kSuccEmpty;
        if ((b & kFail) && (b & kSuccConsume)) o |= kSuccConsume;
        return o;
      }
      case PegKind::Not: {
        std::uint8_t b = eval(p->left.get());
        std::uint8_t o = 0;
        if (b & (kSuccEmpty | kSuccConsume)) o |= kFail;
        if (b & kFail) o |= kSuccEmpty;
        return o;
      }
    }
    return 0;
  }

  // A repetition is safe only if its body always consumes on success and can
  // actually fail; anything else loops.
  bool stars_ok(const PegNode* p) const {
    if (!p) return true;
    if (p->kind == PegKind::Star) {
      std::uint8_t b = eval(p->left.get());
      if (b == 0) return false;
      if (b & kSuccEmpty) return false;
      if (!(b & kFail)) return false;
    }
    return stars_ok(p->left.get()) && stars_ok(p->right.get());
  }

 private:
  const Grammar& g_;
  std::unordered_map<std::string_view, std::uint8_t> out_;
};

}  // namespace

bool is_complete(const Grammar& g) {
  if (!find_undefined_reference(g).empty()) return false;
  Completeness an(g);
  if (an.eval(g.start.get()) == 0) return false;
  for (const auto& [name, body] : g.productions)
    if (an.eval(body.get()) == 0) return false;
  if (!an.stars_ok(g.start.get())) return false;
  for (const auto& [name, body] : g.productions)
    if (!an.stars_ok(body.get())) return false;
  return true;
}

}  // namespace repeg
