#pragma once

#include <bitset>
#include <cstdint>
#include <string_view>
#include <vector>

namespace repeg {

// Set of byte symbols. Backs character classes in patterns as well as
// FIRST sets.
class CharSet {
 public:
  CharSet() = default;

  static CharSet single(unsigned char c) {
    CharSet s;
    s.bits_.set(c);
    return s;
  }

  static CharSet of(std::string_view chars) {
    CharSet s;
    for (char c : chars) s.bits_.set(static_cast<unsigned char>(c));
    return s;
  }

  static CharSet range(unsigned char lo, unsigned char hi) {
    CharSet s;
    s.add_range(lo, hi);
    return s;
  }

  bool test(unsigned char c) const { return bits_.test(c); }
  void add(unsigned char c) { bits_.set(c); }

  void add_range(unsigned char lo, unsigned char hi) {
    for (unsigned v = lo; v <= hi; ++v) bits_.set(v);
  }

  bool empty() const { return bits_.none(); }
  std::size_t count() const { return bits_.count(); }
  bool is_singleton() const { return bits_.count() == 1; }

  CharSet operator|(const CharSet& o) const {
    CharSet s;
    s.bits_ = bits_ | o.bits_;
    return s;
  }

  CharSet operator&(const CharSet& o) const {
    CharSet s;
    s.bits_ = bits_ & o.bits_;
    return s;
  }

  CharSet complement_within(const CharSet& universe) const {
    CharSet s;
    s.bits_ = ~bits_ & universe.bits_;
    return s;
  }

  bool subset_of(const CharSet& o) const { return (bits_ & ~o.bits_).none(); }
  bool intersects(const CharSet& o) const { return (bits_ & o.bits_).any(); }

  // Ascending byte values.
  std::vector<unsigned char> symbols() const {
    std::vector<unsigned char> out;
    out.reserve(bits_.count());
    for (unsigned v = 0; v < 256; ++v)
      if (bits_.test(v)) out.push_back(static_cast<unsigned char>(v));
    return out;
  }

  friend bool operator==(const CharSet&, const CharSet&) = default;

 private:
  std::bitset<256> bits_;
};

// The terminal alphabet. Every class in a pattern or grammar must stay
// inside it; ordering is plain byte order.
struct Alphabet {
  CharSet symbols;

  static Alphabet all_bytes() {
    Alphabet a;
    a.symbols.add_range(0, 255);
    return a;
  }

  static Alphabet of(std::string_view chars) { return Alphabet{CharSet::of(chars)}; }

  bool contains(unsigned char c) const { return symbols.test(c); }
  std::size_t size() const { return symbols.count(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

}  // namespace repeg
