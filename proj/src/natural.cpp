#include "dichotomy/natural.hpp"

#include <cmath>
#include <stdexcept>

namespace dichotomy {

Natural cantor_pair(const Natural& a, const Natural& b) {
  Natural w = a + b;
  Natural t = w * (w + 1);
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
  return t + b;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& z) {
  // w = floor((sqrt(8z + 1) - 1) / 2)
  Natural disc = 8 * z + 1;
  Natural root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  Natural w = (root - 1) / 2;
  Natural t = w * (w + 1) / 2;
  Natural b = z - t;
  Natural a = w - b;
  return {a, b};
}

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t w = a + b;
  return w * (w + 1) / 2 + b;
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z) {
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  // Correct the floating point estimate.
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  const std::uint64_t b = z - w * (w + 1) / 2;
  return {w - b, b};
}

std::size_t hash_natural(const Natural& n) noexcept {
  const mpz_srcptr p = n.get_mpz_t();
  const std::size_t limbs = mpz_size(p);
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ limbs;
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Natural parse_natural(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty number");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal natural: " + std::string(digits));
  }
  return Natural(std::string(digits), 10);
}

std::optional<std::uint64_t> to_u64(const Natural& n) {
  if (n < 0) return std::nullopt;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

}  // namespace dichotomy
