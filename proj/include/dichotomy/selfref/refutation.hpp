#pragma once

#include "dichotomy/calculus/proof.hpp"

namespace dichotomy {

/// Name of the pure-logic lemma carried by the refutation:
/// (D = c) -> ((K(phi) -> phi) -> ((K(phi) <-> In(c, e)) -> phi)).
inline constexpr const char* kDiagonalArgument = "diagonal_argument";

/// A proof of ~(0 = 0) from sigma_e(e): a machine that knows its own
/// factivity and its own index is inconsistent.
Proof build_refutation(const Natural& e);

}  // namespace dichotomy
