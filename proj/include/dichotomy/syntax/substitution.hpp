#pragma once

#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

Term substitute(const Term& t, VarIndex var, const Term& replacement);

/// Capture-avoiding substitution of `replacement` for the free occurrences of
/// `var`. K-atoms are returned unchanged. A binder that would capture a
/// variable of `replacement` is renamed to the smallest index that is neither
/// free in the replacement, free in the body, nor `var` itself.
Formula substitute(const Formula& f, VarIndex var, const Term& replacement);

/// Smallest index outside `avoid`.
VarIndex smallest_fresh(const VarSet& avoid);

}  // namespace dichotomy
