#pragma once

#include "dichotomy/natural.hpp"

namespace dichotomy {

/// The diagonal function. If n codes a formula psi, returns the code of psi
/// with the numeral for n substituted for x0; otherwise 0. This is the
/// meaning of the primitive `diag` term symbol.
Natural diag_fn(const Natural& n);

}  // namespace dichotomy
