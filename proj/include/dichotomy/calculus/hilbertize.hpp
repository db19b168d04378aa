#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dichotomy/calculus/proof.hpp"

namespace dichotomy {

class ScriptError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Accumulates steps into a Proof, reusing the first step for each formula
/// and splicing in closed sub-proofs.
class ProofBuilder {
 public:
  std::size_t add(const Formula& f, const Justification& j);
  /// Appends the steps of p and merges its lemmas; returns the index of p's
  /// conclusion.
  std::size_t splice(const Proof& p);
  void add_lemma(const Lemma& lemma);
  const Formula& formula(std::size_t i) const { return steps_[i].formula; }
  std::size_t size() const { return steps_.size(); }

  /// The steps that `conclusion` depends on, renumbered, ending with it.
  Proof build(std::size_t conclusion) const;

 private:
  std::vector<Step> steps_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::vector<Lemma> lemmas_;
};

/// A natural-deduction style script compiled to a Hilbert proof by the
/// deduction theorem. Lines are handles; a line is usable while the scope it
/// was introduced in is open.
class Script {
 public:
  using Line = std::size_t;

  Line assume(const Formula& hypothesis);
  Line logic(Schema schema, const Formula& f);
  Line theory(const SchemaId& schema, const Formula& f, const std::string& lemma = {});
  Line axiom(const Formula& f, const Justification& j);
  Line mp(Line premise, Line implication);
  Line gen(Line line, VarIndex var);
  /// The conclusion of a closed proof; its steps are spliced in at the end.
  Line use(const Proof& proof);
  void lemma(const Lemma& lemma);

  /// Closes the innermost assumption H; returns the line H -> f(conclusion)
  /// in the enclosing scope.
  Line discharge(Line conclusion);
  /// Discharges every open assumption, innermost first, and compiles.
  Proof finish(Line conclusion);

  const Formula& formula(Line l) const { return nodes_.at(l).formula; }
  std::size_t depth() const { return scopes_.size(); }

 private:
  enum class Kind { Hyp, Axiom, Use, MP, Gen };
  struct Node {
    Formula formula;
    Kind kind;
    Justification justification;  // Axiom
    std::size_t a = 0, b = 0;     // MP premise, implication; Gen premise; Use proof
    VarIndex var = 0;
    std::size_t scope = 0;
    std::vector<std::size_t> hyps;  // open hypotheses this line rests on
  };
  struct Scope {
    std::size_t id;
    std::size_t hyp;
  };

  Line push(Node n);
  void require_live(Line l) const;
  std::vector<std::size_t> hyps_of(std::initializer_list<Line> premises) const;
  Line identity_in_parent(const Formula& h);
  Line lift_constant(Line direct, Formula h);
  using Memo = std::unordered_map<Line, Line>;
  Line direct(Line n, std::size_t scope, Memo& memo);
  Line lifted(Line n, const Scope& scope, Memo& lift_memo, Memo& memo);

  std::vector<Node> nodes_;
  std::vector<Proof> used_;
  std::vector<Lemma> lemmas_;
  std::vector<Scope> scopes_;
  std::vector<bool> closed_{false};  // by scope id; 0 is the root
  std::size_t current_scope() const { return scopes_.empty() ? 0 : scopes_.back().id; }
};

}  // namespace dichotomy
