#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace dichotomy {

/// Arbitrary-precision natural number. Godel codes and numerals live here.
using Natural = mpz_class;

/// Cantor pairing: pi(a, b) = (a + b)(a + b + 1) / 2 + b.
Natural cantor_pair(const Natural& a, const Natural& b);

/// Inverse of cantor_pair.
std::pair<Natural, Natural> cantor_unpair(const Natural& z);

/// Machine-word versions, used for enumeration indices. They assume no overflow.
std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

std::size_t hash_natural(const Natural& n) noexcept;

/// Parses a decimal natural. Throws std::invalid_argument on anything else.
Natural parse_natural(std::string_view digits);

std::optional<std::uint64_t> to_u64(const Natural& n);

inline std::string to_string(const Natural& n) { return n.get_str(); }

struct NaturalHash {
  std::size_t operator()(const Natural& n) const noexcept { return hash_natural(n); }
};

}  // namespace dichotomy
