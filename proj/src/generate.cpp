#include "repeg/generate.hpp"

#include <random>
#include <vector>

namespace repeg {

namespace {

class Gen {
 public:
  Gen(std::uint64_t seed, const Alphabet& alpha, bool extensions)
      : rng_(seed), alpha_(alpha.symbols.symbols()), extensions_(extensions) {}

  RegexPtr build(int depth) {
    if (depth <= 0) return leaf();
    // avoid distribution objects so the stream is pinned to the engine alone
    std::uint64_t roll = rng_() % 100;
    if (roll < 40) return leaf();
    if (roll < 60) return rx::concat(build(depth - 1), build(depth - 1));
    if (roll < 80) return rx::choice(build(depth - 1), build(depth - 1));
    if (roll < 90 || !extensions_) return rx::star(build(depth - 1));
    switch (rng_() % 5) {
      case 0:
        return rx::atomic(build(depth - 1));
      case 1:
        return rx::possessive(build(depth - 1));
      case 2:
        return rx::lazy(build(depth - 1));
      case 3:
        return rx::neg_lookahead(build(depth - 1));
      default:
        return rx::pos_lookahead(build(depth - 1));
    }
  }

 private:
  RegexPtr leaf() {
    std::uint64_t pick = rng_() % (alpha_.size() + 1);
    if (pick == alpha_.size()) return rx::empty();
    return rx::chr(alpha_[pick]);
  }

  std::mt19937_64 rng_;
  std::vector<unsigned char> alpha_;
  bool extensions_;
};

}  // namespace

RegexPtr random_regex(std::uint64_t seed, int max_depth, const Alphabet& alphabet,
                      bool extensions) {
  Gen gen(seed, alphabet, extensions);
  return gen.build(max_depth);
}

}  // namespace repeg
