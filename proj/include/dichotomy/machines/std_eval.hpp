#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "dichotomy/enumvm/registry.hpp"
#include "dichotomy/machines/truth.hpp"
#include "dichotomy/syntax/ast.hpp"

namespace dichotomy {

class OpenFormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truth value of a K-atom K(psi); psi is passed.
using KOracle = std::function<TruthValue3(const Formula& psi)>;

struct EvalOptions {
  std::uint64_t vm_budget = 100000;    // steps per InW run
  std::uint64_t search_limit = 64;     // candidates tried by an unbounded quantifier
  std::uint64_t bounded_limit = 4096;  // largest bound expanded exactly
  std::uint64_t fuel = 1000000;        // atoms evaluated in total
  vm::Registry* registry = nullptr;    // for InW; null means the standard registry

  /// vm_budget, search_limit and bounded_limit all equal to `budget`.
  static EvalOptions from_budget(std::uint64_t budget);
};

/// Budgeted truth in the standard model. Every decided value is correct given
/// the oracle's decided values; Unknown marks an exhausted budget or an
/// undecided oracle. ∀x(∃y(y + x = t) -> psi), with t free of x and y, is
/// expanded over x <= t. Other universal quantifiers are False on a
/// counterexample among the first search_limit naturals, otherwise Unknown.
/// InW(a, b) is True if a appears in W_b within vm_budget steps, False if the
/// run of b ends without it, otherwise Unknown. The limits are approached by
/// doubling, with `fuel` per stage, so raising any option never turns a
/// decided value into Unknown.
TruthValue3 std_eval(const Formula& phi, const KOracle& oracle, const EvalOptions& options);
TruthValue3 std_eval(const Formula& phi, std::uint64_t budget, const KOracle& oracle);

/// Oracle answering Unknown everywhere.
TruthValue3 unknown_oracle(const Formula& psi);

}  // namespace dichotomy
