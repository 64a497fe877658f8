#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace repeg {

enum class MatchKind : std::uint8_t {
  Consumed,       // matched a prefix of `consumed` symbols
  Fail,           // no match
  FuelExhausted,  // step budget ran out before a verdict
};

// Result of running a matcher on an input. Consumed(n) and Fail are the two
// proper outcomes; FuelExhausted signals a pathological pattern (e.g. a
// repetition over an expression that can match the empty string).
struct MatchOutcome {
  MatchKind kind = MatchKind::Fail;
  std::size_t consumed = 0;

  static MatchOutcome matched(std::size_t n) { return {MatchKind::Consumed, n}; }
  static MatchOutcome fail() { return {MatchKind::Fail, 0}; }
  static MatchOutcome fuel_exhausted() { return {MatchKind::FuelExhausted, 0}; }

  bool is_match() const { return kind == MatchKind::Consumed; }
  bool is_fail() const { return kind == MatchKind::Fail; }
  bool out_of_fuel() const { return kind == MatchKind::FuelExhausted; }

  std::string to_string() const {
    switch (kind) {
      case MatchKind::Consumed:
        return "consumed(" + std::to_string(consumed) + ")";
      case MatchKind::Fail:
        return "fail";
      default:
        return "fuel-exhausted";
    }
  }

  friend bool operator==(const MatchOutcome&, const MatchOutcome&) = default;
};

}  // namespace repeg
