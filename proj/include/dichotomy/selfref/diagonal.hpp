#pragma once

#include "dichotomy/calculus/proof.hpp"

namespace dichotomy {

struct DiagonalResult {
  Formula theta;      // template with diag(x0) in place of x0
  Formula phi;        // theta at the numeral of its own code
  Proof equivProof;   // phi <-> template(num code(phi)), over PA with Comp
};

/// Diagonal lemma for a template in x0. phi is template(x0 | diag(num t)),
/// where t is the code of template(x0 | diag(x0)); diag(num t) evaluates to
/// the code of phi, and Comp plus EqSubst give the biconditional.
DiagonalResult diagonal_general(const Formula& templ);

/// The sentence saying "my code is not in W_e".
DiagonalResult build_diagonal(const Natural& e);

}  // namespace dichotomy
