#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dichotomy/calculus/proof.hpp"

namespace dichotomy {

/// Fair, deterministic enumeration of the consequences of a theory.
///
/// Each step is one unit of work. Even steps draw the next instance of one
/// schema, round robin over the logical schemas and then the theory's;
/// instance parameters come from code order through tuple decoding of the
/// schema's own counter. Odd steps take one pending inference from a FIFO
/// agenda: modus ponens with an earlier theorem, or generalization over a
/// free variable. A formula is emitted the first time it is derived.
class ConsequenceEnumerator {
 public:
  explicit ConsequenceEnumerator(TheorySpec theory);
  ~ConsequenceEnumerator();
  ConsequenceEnumerator(ConsequenceEnumerator&&) noexcept;
  ConsequenceEnumerator& operator=(ConsequenceEnumerator&&) noexcept;

  /// One unit of work; returns the stream index of a newly emitted formula.
  std::optional<std::size_t> step();
  /// Steps until steps_taken() reaches `steps`.
  void run_to(std::uint64_t steps);
  /// Steps until the stream has `count` elements or `max_steps` is reached.
  void fill(std::size_t count, std::uint64_t max_steps);

  std::uint64_t steps_taken() const noexcept { return steps_; }
  const TheorySpec& theory() const noexcept { return theory_; }
  std::size_t size() const noexcept { return stream_.size(); }
  const Formula& at(std::size_t i) const;
  const Natural& code_at(std::size_t i);
  std::optional<std::size_t> position(const Formula& f) const;

  /// A proof of the i-th stream element that check_proof accepts.
  Proof proof_of(std::size_t i) const;

 private:
  struct Node;
  struct Cursor;

  std::optional<std::size_t> insert(Node node);
  std::optional<Node> instance(Cursor& c);
  std::optional<Formula> kt_body(std::uint64_t n);
  Lemma lemma_for(const Node& n) const;

  TheorySpec theory_;
  std::uint64_t steps_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> stream_;  // node ids
  std::vector<Natural> codes_;
  std::unordered_map<Formula, std::vector<std::uint32_t>, FormulaHash> by_formula_;
  std::unordered_map<Formula, std::vector<std::uint32_t>, FormulaHash> by_antecedent_;
  std::unordered_map<Formula, std::size_t, FormulaHash> position_;
  std::deque<Node> agenda_;
  std::vector<Cursor> cursors_;
  std::size_t next_cursor_ = 0;
  std::unique_ptr<ConsequenceEnumerator> pure_;  // KT witnesses
};

/// The first `budget` steps' worth of the stream.
std::vector<Formula> enumerate_consequences(const TheorySpec& theory, std::uint64_t budget);

}  // namespace dichotomy
