#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dichotomy/calculus/schema.hpp"
#include "dichotomy/enumvm/registry.hpp"
#include "dichotomy/machines/std_eval.hpp"

namespace dichotomy {

/// A knowing machine, given by the deterministic stream of what it knows.
class Machine {
 public:
  /// Returns the first `count` entries, or all of them if there are fewer.
  using Source = std::function<std::vector<Formula>(std::size_t count)>;

  Machine(std::string name, Source source, std::optional<Natural> claimed_index = {},
          std::optional<TheorySpec> theory = {});

  const std::string& name() const { return name_; }
  const std::optional<Natural>& claimed_index() const { return claimed_index_; }
  const std::optional<TheorySpec>& theory() const { return theory_; }
  std::vector<Formula> knowledge(std::size_t count) const { return source_(count); }

 private:
  std::string name_;
  Source source_;
  std::optional<Natural> claimed_index_;
  std::optional<TheorySpec> theory_;
};

/// The process-wide registry: know-nothing, PA and slash programs at 0, 2 and
/// 4, then the self-knowing fixed point at 6.
vm::Registry& standard_registry();

Machine make_know_nothing();
/// Every formula, in increasing order of code.
Machine make_know_all();
Machine make_pa_machine();
Machine make_slash_machine();

struct SelfKnowing {
  Machine machine;
  Natural e_star;
};

/// Knows exactly W_e* where e* is a fixed point of e -> EnumConsequences(sigma'_e).
/// Reuses a fixed point already present in `reg`, otherwise allocates one.
SelfKnowing make_self_knowing_machine(vm::Registry& reg);
SelfKnowing make_self_knowing_machine();

/// know-nothing, know-all, pa, slash or self-knowing.
std::optional<Machine> machine_by_name(std::string_view name, vm::Registry& reg);
const std::vector<std::string>& machine_names();

struct Violation {
  Natural code;
  Formula formula;
  TruthValue3 verdict;
};

inline constexpr std::size_t kDefaultAuditBudget = 500;

/// Entries among the first `budget` that are False in the standard model,
/// with K(psi) True when psi is among those entries and Unknown otherwise.
/// Open entries are read as their universal closures.
std::vector<Violation> audit_factivity(const Machine& m, std::size_t budget, const EvalOptions& options);
std::vector<Violation> audit_factivity(const Machine& m, std::size_t budget);

}  // namespace dichotomy
