#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

/// Node tags of the structural Godel coding. A node is coded as
/// cantor_pair(tag, payload).
enum class CodeTag : unsigned {
  Var = 0,
  Zero = 1,
  Succ = 2,
  Plus = 3,
  Times = 4,
  NumLit = 5,
  Eq = 6,
  InW = 7,
  Not = 8,
  Imp = 9,
  Forall = 10,
  KAtom = 11,
  Diag = 12,
};

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Expression = std::variant<Term, Formula>;

Natural encode(const Term& t);
Natural encode(const Formula& f);

/// Decodes a term or a formula, whichever the code denotes.
Expression decode(const Natural& code);
Term decode_term(const Natural& code);
Formula decode_formula(const Natural& code);

std::optional<Term> try_decode_term(const Natural& code);
std::optional<Formula> try_decode_formula(const Natural& code);

}  // namespace dichotomy
