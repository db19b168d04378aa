#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar, loosest to tightest:
///   forall xi. A | exists xi. A      (extends as far right as possible)
///   A <-> B                          (right associative)
///   A -> B                           (right associative)
///   A | B, then A & B                (left associative)
///   ~A, K(A), In(t, t), t = t, (A)
/// Terms: t + t, t * t, S(t), diag(t), num N, 0, xi, (t).
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

}  // namespace dichotomy
