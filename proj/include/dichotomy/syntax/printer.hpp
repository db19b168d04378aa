#pragma once

#include <iosfwd>
#include <string>

#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

/// Concrete syntax. Conjunction, biconditional and existential shapes are
/// printed with their sugar; the parser expands them back to the same tree.
std::string to_string(const Term& t);
std::string to_string(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace dichotomy
