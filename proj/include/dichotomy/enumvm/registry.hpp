#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dichotomy/enumvm/prog.hpp"

namespace dichotomy::vm {

class RunIndexCursor;
class FamilyCursor;

class UnallocatedIndex : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct RunResult {
  std::vector<Natural> elements;  // in emission order, possibly with repeats
  bool exhausted = false;         // the program can emit nothing more
};

enum class Membership : std::uint8_t { Member, NonMember, Unknown };

/// The virtual index whose program is Section(n, RunIndex(e)).
Natural smn_index(const Natural& e, const Natural& n);

/// An append-only numbering of enumerator programs.
///
/// Entry k has index 2k. Odd indices are s-m-n indices: 2 pair(e, n) + 1
/// denotes Section(n, RunIndex(e)) without allocating anything. Inside the
/// program of entry 2k, indices of later entries are inert, so a run never
/// depends on what is allocated after its entry. A run is deterministic and
/// budget-monotone: one unit of budget is one evaluation step, and a step
/// emits at most one element.
class Registry {
 public:
  static constexpr std::size_t kMaxDepth = 512;

  Registry();
  Registry(const Registry&) = delete;
  Registry& operator=(const Registry&) = delete;
  ~Registry();

  /// Appends a program; Self in it denotes the returned index. Throws
  /// std::invalid_argument if the program has a free Param.
  Natural alloc(const Prog& p);
  std::size_t size() const;
  bool allocated(const Natural& index) const;
  /// The stored program, or Section(n, RunIndex(e)) for an s-m-n index.
  Prog program(const Natural& index) const;
  /// smn_index(e, n) after checking that e is allocated.
  Natural smn(const Natural& e, const Natural& n) const;

  /// The first `budget` steps' worth of W_index. Throws UnallocatedIndex.
  RunResult run(const Natural& index, std::uint64_t budget);
  /// Member if x is emitted within `budget` steps, NonMember if the run
  /// ends without it, Unknown otherwise. Unallocated indices are Unknown.
  Membership member(const Natural& index, const Natural& x, std::uint64_t budget);
  /// Step at which x is first emitted, if within `budget`.
  std::optional<std::uint64_t> first_emission(const Natural& index, const Natural& x, std::uint64_t budget);

  /// `alloc <index> <sexpr>` per line.
  std::string transcript() const;
  /// Replays a transcript into this registry; each recorded index must come
  /// out as recorded. Blank lines and lines starting with '#' are skipped.
  void replay(std::string_view transcript);

  class Cursor;
  struct Env;
  struct Run;

 private:
  friend class RunIndexCursor;
  friend class FamilyCursor;
  std::unique_ptr<Cursor> make_cursor(const Prog& p, const Env& env, std::size_t depth) const;
  std::unique_ptr<Cursor> resolve(const Natural& index, const Natural& limit, std::size_t depth) const;
  Run& run_locked(const Natural& index, std::uint64_t budget);

  std::deque<Prog> entries_;
  std::map<Natural, std::unique_ptr<Run>> runs_;
  mutable std::recursive_mutex mu_;
};

}  // namespace dichotomy::vm
