#pragma once

#include <cstddef>

#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

/// The i-th formula (resp. term) in increasing order of Godel code, counting
/// from zero and skipping naturals that code something else or nothing.
/// Results are memoized process-wide; safe to call from several threads.
Formula formula_at(std::size_t i);
Natural formula_code_at(std::size_t i);
Term term_at(std::size_t i);

}  // namespace dichotomy
