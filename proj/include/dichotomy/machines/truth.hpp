#pragma once

#include <cstdint>
#include <string_view>

namespace dichotomy {

enum class TruthValue3 : std::uint8_t { False, True, Unknown };

// Strong Kleene connectives.
constexpr TruthValue3 t_not(TruthValue3 a) {
  switch (a) {
    case TruthValue3::True: return TruthValue3::False;
    case TruthValue3::False: return TruthValue3::True;
    default: return TruthValue3::Unknown;
  }
}

constexpr TruthValue3 t_and(TruthValue3 a, TruthValue3 b) {
  if (a == TruthValue3::False || b == TruthValue3::False) return TruthValue3::False;
  if (a == TruthValue3::True && b == TruthValue3::True) return TruthValue3::True;
  return TruthValue3::Unknown;
}

constexpr TruthValue3 t_or(TruthValue3 a, TruthValue3 b) { return t_not(t_and(t_not(a), t_not(b))); }

constexpr TruthValue3 t_implies(TruthValue3 a, TruthValue3 b) { return t_or(t_not(a), b); }

constexpr std::string_view to_string(TruthValue3 v) {
  switch (v) {
    case TruthValue3::True: return "True";
    case TruthValue3::False: return "False";
    default: return "Unknown";
  }
}

}  // namespace dichotomy
