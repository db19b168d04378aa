#pragma once

#include "dichotomy/calculus/proof.hpp"

/// Closed pure-logic proofs of standard propositional facts, for splicing
/// into scripts.
namespace dichotomy::lemmas {

Proof identity(const Formula& a);                      // A -> A
Proof double_negation(const Formula& a);               // ~~A -> A
Proof double_negation_intro(const Formula& a);         // A -> ~~A
Proof explosion(const Formula& b, const Formula& c);   // ~B -> (B -> C)
Proof contra_reverse(const Formula& b, const Formula& c);  // (~C -> ~B) -> (B -> C)
Proof contrapose(const Formula& c, const Formula& b);  // (C -> B) -> (~B -> ~C)
Proof negated_implication(const Formula& b, const Formula& c);  // B -> (~C -> ~(B -> C))
Proof cases(const Formula& b, const Formula& c);       // (B -> C) -> ((~B -> C) -> C)
Proof consequentia_mirabilis(const Formula& a);        // (~A -> A) -> A
Proof and_left(const Formula& a, const Formula& b);    // A & B -> A
Proof and_right(const Formula& a, const Formula& b);   // A & B -> B
Proof and_intro(const Formula& a, const Formula& b);   // A -> (B -> A & B)
Proof iff_forward(const Formula& a, const Formula& b);   // (A <-> B) -> (A -> B)
Proof iff_backward(const Formula& a, const Formula& b);  // (A <-> B) -> (B -> A)

}  // namespace dichotomy::lemmas
