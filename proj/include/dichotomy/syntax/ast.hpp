#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dichotomy/natural.hpp"

namespace dichotomy {

using VarIndex = std::uint32_t;

/// Sorted, duplicate-free list of variable indices.
using VarSet = std::vector<VarIndex>;

bool contains(const VarSet& set, VarIndex v) noexcept;

/// A term of PA extended by numerals and the diagonal function symbol.
/// Immutable; copies share structure.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Zero, Succ, Plus, Times, NumLit, Diag };

  static Term var(VarIndex i);
  static Term zero();
  static Term succ(Term t);
  static Term plus(Term a, Term b);
  static Term times(Term a, Term b);
  static Term num(Natural n);
  static Term diag(Term t);

  Kind kind() const noexcept;
  VarIndex index() const;        // Var
  const Natural& value() const;  // NumLit
  const Term& arg(std::size_t i = 0) const;
  std::size_t arity() const noexcept;

  std::size_t hash() const noexcept;
  const VarSet& free_vars() const noexcept;
  bool is_closed() const noexcept { return free_vars().empty(); }

  friend bool operator==(const Term& a, const Term& b) noexcept;
  friend bool operator!=(const Term& a, const Term& b) noexcept { return !(a == b); }

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A formula of L(K). Only the core connectives exist here; the parser
/// expands the rest. K-atoms are opaque 0-ary predicate symbols.
class Formula {
 public:
  enum class Kind : std::uint8_t { Eq, InW, Not, Imp, Forall, KAtom };

  static Formula eq(Term a, Term b);
  /// In(member, index): member is in the r.e. set W_index.
  static Formula in(Term member, Term index);
  static Formula negation(Formula f);
  static Formula implies(Formula a, Formula b);
  static Formula forall(VarIndex v, Formula body);
  static Formula known(Formula f);

  // Abbreviations, expanded exactly as the parser expands them.
  static Formula conj(Formula a, Formula b);    // ~(a -> ~b)
  static Formula disj(Formula a, Formula b);    // ~a -> b
  static Formula iff(Formula a, Formula b);     // (a -> b) & (b -> a)
  static Formula exists(VarIndex v, Formula body);  // ~forall v. ~body

  Kind kind() const noexcept;
  const Term& term(std::size_t i) const;        // Eq, InW
  const Formula& sub(std::size_t i = 0) const;  // Not, Imp, Forall, KAtom
  VarIndex bound() const;                       // Forall

  std::size_t hash() const noexcept;
  /// Free variables. K-atoms contribute none.
  const VarSet& free_vars() const noexcept;
  bool is_closed() const noexcept { return free_vars().empty(); }
  /// Every variable index occurring anywhere outside K-atoms, bound or free.
  const VarSet& all_vars() const noexcept;

  bool is(Kind k) const noexcept { return kind() == k; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend bool operator!=(const Formula& a, const Formula& b) noexcept { return !(a == b); }

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};
struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Parses out an abbreviated connective, if the formula has that exact shape.
struct Conjunction {
  Formula left, right;
};
std::optional<Conjunction> match_conj(const Formula& f);
std::optional<Conjunction> match_iff(const Formula& f);

/// Universal closure over the free variables; the outermost quantifier binds
/// the smallest index.
Formula universal_closure(const Formula& f);

}  // namespace dichotomy
