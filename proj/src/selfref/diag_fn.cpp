#include "dichotomy/selfref/diag_fn.hpp"

#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/substitution.hpp"

namespace dichotomy {

Natural diag_fn(const Natural& n) {
  auto psi = try_decode_formula(n);
  if (!psi) return 0;
  return encode(substitute(*psi, 0, Term::num(n)));
}

}  // namespace dichotomy
