#pragma once

#include <memory>
#include <unordered_map>

#include "dichotomy/calculus/enumerator.hpp"
#include "dichotomy/machines/std_eval.hpp"

namespace dichotomy {

/// The slash model of a theory at a budget: K(psi) holds when psi holds in
/// the model and psi is among the first `budget` elements of the theory's
/// consequence stream. The truth of an open psi is that of its universal
/// closure. Membership in the stream is only ever affirmed, so a psi outside
/// the prefix makes K(psi) Unknown unless psi itself is False.
class SlashModel {
 public:
  SlashModel(TheorySpec sigma, std::uint64_t budget);
  SlashModel(TheorySpec sigma, std::uint64_t budget, EvalOptions options);

  TruthValue3 eval(const Formula& phi);
  TruthValue3 known(const Formula& psi);
  bool provable(const Formula& psi);
  /// Stream index of psi, if within the prefix.
  std::optional<std::size_t> stage(const Formula& psi);

  const TheorySpec& theory() const { return en_.theory(); }
  std::uint64_t budget() const { return budget_; }

 private:
  void fill();

  ConsequenceEnumerator en_;
  std::uint64_t budget_;
  EvalOptions options_;
  bool filled_ = false;
  std::unordered_map<Formula, TruthValue3, FormulaHash> memo_;
};

TruthValue3 slash_eval(const TheorySpec& sigma, const Formula& phi, std::uint64_t budget);

}  // namespace dichotomy
