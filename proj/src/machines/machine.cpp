#include "dichotomy/machines/machine.hpp"

#include <memory>
#include <mutex>
#include <unordered_set>

#include "dichotomy/calculus/enumerator.hpp"
#include "dichotomy/enumvm/fixed_point.hpp"
#include "dichotomy/syntax/code_order.hpp"
#include "dichotomy/syntax/codec.hpp"

namespace dichotomy {

Machine::Machine(std::string name, Source source, std::optional<Natural> claimed_index,
                 std::optional<TheorySpec> theory)
    : name_(std::move(name)),
      source_(std::move(source)),
      claimed_index_(std::move(claimed_index)),
      theory_(std::move(theory)) {}

namespace {

std::uint64_t step_cap(std::size_t count) { return 64 * static_cast<std::uint64_t>(count) + 4096; }

Machine consequence_machine(std::string name, TheorySpec theory) {
  struct Shared {
    explicit Shared(TheorySpec t) : en(std::move(t)) {}
    std::mutex mu;
    ConsequenceEnumerator en;
  };
  auto shared = std::make_shared<Shared>(theory);
  auto source = [shared](std::size_t count) {
    std::lock_guard lock(shared->mu);
    shared->en.fill(count, step_cap(count));
    std::vector<Formula> out;
    for (std::size_t i = 0; i < count && i < shared->en.size(); ++i) out.push_back(shared->en.at(i));
    return out;
  };
  return Machine(std::move(name), source, std::nullopt, theory);
}

bool is_fixed_point_of_consequences(const vm::Prog& p) {
  return p == vm::instantiate(vm::consequences_transformer(), vm::Expr::self());
}

}  // namespace

vm::Registry& standard_registry() {
  static vm::Registry* reg = [] {
    auto* r = new vm::Registry;
    r->alloc(vm::Prog::emit({}));
    r->alloc(vm::Prog::enum_consequences(vm::Expr::lit(TheorySpec::pa().code())));
    r->alloc(vm::Prog::enum_consequences(vm::Expr::lit(TheorySpec::sigma_slash().code())));
    vm::fixed_point(*r, vm::consequences_transformer());
    return r;
  }();
  return *reg;
}

Machine make_know_nothing() {
  return Machine("know-nothing", [](std::size_t) { return std::vector<Formula>{}; });
}

Machine make_know_all() {
  return Machine("know-all", [](std::size_t count) {
    std::vector<Formula> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(formula_at(i));
    return out;
  });
}

Machine make_pa_machine() { return consequence_machine("pa", TheorySpec::pa()); }

Machine make_slash_machine() { return consequence_machine("slash", TheorySpec::sigma_slash()); }

SelfKnowing make_self_knowing_machine(vm::Registry& reg) {
  std::optional<Natural> e;
  for (std::size_t k = 0; k < reg.size() && !e; ++k) {
    Natural i(static_cast<unsigned long>(2 * k));
    if (is_fixed_point_of_consequences(reg.program(i))) e = i;
  }
  if (!e) e = vm::fixed_point(reg, vm::consequences_transformer());
  Natural star = *e;
  auto source = [&reg, star](std::size_t count) {
    std::vector<Formula> out;
    std::uint64_t steps = count;
    while (true) {
      vm::RunResult r = reg.run(star, steps);
      if (r.elements.size() >= count || r.exhausted || steps >= step_cap(count)) {
        for (std::size_t i = 0; i < count && i < r.elements.size(); ++i)
          if (auto f = try_decode_formula(r.elements[i])) out.push_back(*f);
        return out;
      }
      steps = std::min(step_cap(count), 2 * steps + 16);
    }
  };
  Machine m("self-knowing", source, star, TheorySpec::sigma_prime_e(star));
  return {std::move(m), star};
}

SelfKnowing make_self_knowing_machine() { return make_self_knowing_machine(standard_registry()); }

const std::vector<std::string>& machine_names() {
  static const std::vector<std::string> names = {"know-nothing", "know-all", "pa", "slash", "self-knowing"};
  return names;
}

std::optional<Machine> machine_by_name(std::string_view name, vm::Registry& reg) {
  if (name == "know-nothing") return make_know_nothing();
  if (name == "know-all") return make_know_all();
  if (name == "pa") return make_pa_machine();
  if (name == "slash") return make_slash_machine();
  if (name == "self-knowing") return make_self_knowing_machine(reg).machine;
  return std::nullopt;
}

std::vector<Violation> audit_factivity(const Machine& m, std::size_t budget, const EvalOptions& options) {
  std::vector<Formula> prefix = m.knowledge(budget);
  std::unordered_set<Formula, FormulaHash> known(prefix.begin(), prefix.end());
  KOracle oracle = [&known](const Formula& psi) {
    return known.count(psi) ? TruthValue3::True : TruthValue3::Unknown;
  };
  std::vector<Violation> out;
  for (const Formula& f : prefix) {
    TruthValue3 v = std_eval(universal_closure(f), oracle, options);
    if (v == TruthValue3::False) out.push_back({encode(f), f, v});
  }
  return out;
}

std::vector<Violation> audit_factivity(const Machine& m, std::size_t budget) {
  EvalOptions o;
  o.vm_budget = 64 * budget + 4096;
  o.search_limit = 32;
  o.bounded_limit = 1024;
  o.fuel = 100000;
  return audit_factivity(m, budget, o);
}

}  // namespace dichotomy
