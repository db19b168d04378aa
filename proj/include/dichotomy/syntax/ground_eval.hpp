#pragma once

#include <stdexcept>

#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

class OpenTermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Value of a closed term in the standard model; diag(t) is diag_fn of the
/// value of t. Throws OpenTermError on a term with free variables.
Natural eval_ground_term(const Term& t);

}  // namespace dichotomy
