#pragma once

#include <optional>
#include <string>

#include "dichotomy/calculus/proof.hpp"
#include "dichotomy/calculus/schema.hpp"
#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

/// Whether f is an instance of the given logical schema.
bool is_logic_instance(Schema schema, const Formula& f);

/// The six successor, addition and multiplication axioms over x0 and x1.
const std::vector<Formula>& pa_axioms();

/// phi(x|0) -> forall x (phi -> phi(x|Sx)) -> forall x phi
Formula induction_instance(const Formula& phi, VarIndex x);

/// K(a) <-> In(num code(a), num e)
Formula gnum_instance(const Formula& a, const Natural& e);

/// Whether f is an instance of the theory schema `id`. KT, and Closure over
/// KT, succeed only if `witness` is the conclusion of a checked pure-logic
/// derivation equal to the body of the K-atom. The theory is not consulted.
bool is_theory_instance(const SchemaId& id, const Formula& f, const Formula* witness = nullptr);

/// The first schema of `theory` or of the logic that f instantiates. A KT
/// claim is checked against `witness`, which must be a pure-logic proof.
std::optional<SchemaId> is_axiom_instance(const TheorySpec& theory, const Formula& f,
                                          const Proof* witness = nullptr);

}  // namespace dichotomy
