#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "dichotomy/calculus/schema.hpp"
#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

struct LogicAxiom {
  Schema schema;
};

/// An instance of a theory schema. `lemma` names the witness for KT, and for
/// a Closure instance whose body is a KT instance.
struct TheoryAxiom {
  SchemaId schema;
  std::string lemma;
};

/// Step indices are zero-based and must point backwards.
struct ModusPonens {
  std::size_t premise;
  std::size_t implication;
};

struct Generalization {
  std::size_t step;
  VarIndex var;
};

using Justification = std::variant<LogicAxiom, TheoryAxiom, ModusPonens, Generalization>;

struct Step {
  Formula formula;
  Justification justification;
};

/// A named pure-logic derivation used as a KT witness.
struct Lemma {
  std::string name;
  std::vector<Step> steps;
};

struct Proof {
  std::vector<Lemma> lemmas;
  std::vector<Step> steps;

  const Formula& conclusion() const { return steps.back().formula; }
  const Lemma* find_lemma(std::string_view name) const;
};

struct CheckResult {
  bool accepted = true;
  std::size_t step = 0;  // one-based; 0 when accepted
  std::string reason;

  explicit operator bool() const noexcept { return accepted; }
};

/// Conclusions of lemmas that checked, by name.
using LemmaTable = std::unordered_map<std::string, Formula>;

CheckResult check_proof(const TheorySpec& theory, const Proof& proof);

/// Checks a bare step list; KT claims are resolved against `lemmas`.
CheckResult check_steps(const TheorySpec& theory, const std::vector<Step>& steps,
                        const LemmaTable& lemmas);

}  // namespace dichotomy
