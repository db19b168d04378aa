#include "dichotomy/machines/std_eval.hpp"

#include <algorithm>
#include <vector>

#include "dichotomy/machines/machine.hpp"
#include "dichotomy/selfref/diag_fn.hpp"
#include "dichotomy/syntax/printer.hpp"

namespace dichotomy {

EvalOptions EvalOptions::from_budget(std::uint64_t budget) {
  EvalOptions o;
  o.vm_budget = budget;
  o.search_limit = budget;
  o.bounded_limit = budget;
  o.fuel = 64 * budget + 1024;
  return o;
}

TruthValue3 unknown_oracle(const Formula&) { return TruthValue3::Unknown; }

namespace {

using T3 = TruthValue3;

struct BoundedShape {
  VarIndex x;
  const Term* bound;
  const Formula* body;
};

// forall x. ~(forall y. ~(y + x = t)) -> body
std::optional<BoundedShape> bounded(const Formula& f) {
  const Formula& imp = f.sub();
  if (!imp.is(Formula::Kind::Imp)) return std::nullopt;
  const Formula& guard = imp.sub(0);
  if (!guard.is(Formula::Kind::Not) || !guard.sub().is(Formula::Kind::Forall)) return std::nullopt;
  const Formula& inner = guard.sub();
  if (!inner.sub().is(Formula::Kind::Not) || !inner.sub().sub().is(Formula::Kind::Eq)) return std::nullopt;
  const Formula& eq = inner.sub().sub();
  VarIndex x = f.bound(), y = inner.bound();
  if (x == y) return std::nullopt;
  const Term& sum = eq.term(0);
  if (sum.kind() != Term::Kind::Plus || sum.arg(0) != Term::var(y) || sum.arg(1) != Term::var(x)) return std::nullopt;
  const Term& t = eq.term(1);
  if (contains(t.free_vars(), x) || contains(t.free_vars(), y)) return std::nullopt;
  return BoundedShape{x, &t, &imp.sub(1)};
}

class Evaluator {
 public:
  Evaluator(const KOracle& oracle, const EvalOptions& o, vm::Registry& reg)
      : oracle_(oracle), o_(o), reg_(reg), fuel_(o.fuel) {}

  T3 eval(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Eq:
      case Formula::Kind::InW: return atom(f);
      case Formula::Kind::Not: return t_not(eval(f.sub()));
      case Formula::Kind::Imp: {
        T3 a = eval(f.sub(0));
        if (a == T3::False) return T3::True;
        return t_implies(a, eval(f.sub(1)));
      }
      case Formula::Kind::KAtom: return oracle_(f.sub());
      case Formula::Kind::Forall: return forall(f);
    }
    return T3::Unknown;
  }

 private:
  T3 atom(const Formula& f) {
    if (fuel_ == 0) return T3::Unknown;
    --fuel_;
    Natural a = term(f.term(0)), b = term(f.term(1));
    if (f.is(Formula::Kind::Eq)) return a == b ? T3::True : T3::False;
    switch (reg_.member(b, a, o_.vm_budget)) {
      case vm::Membership::Member: return T3::True;
      case vm::Membership::NonMember: return T3::False;
      default: return T3::Unknown;
    }
  }

  T3 forall(const Formula& f) {
    VarIndex x = f.bound();
    const Formula& body = f.sub();
    if (!contains(body.free_vars(), x)) return eval(body);
    if (auto shape = bounded(f)) {
      Natural t = term(*shape->bound);
      if (t <= o_.bounded_limit) {
        T3 acc = T3::True;
        for (unsigned long n = 0; n <= t.get_ui(); ++n) {
          acc = t_and(acc, with(x, Natural(n), *shape->body));
          if (acc == T3::False) return acc;
          if (fuel_ == 0) return T3::Unknown;
        }
        return acc;
      }
    }
    for (std::uint64_t n = 0; n < o_.search_limit && fuel_ > 0; ++n)
      if (with(x, Natural(static_cast<unsigned long>(n)), body) == T3::False) return T3::False;
    return T3::Unknown;
  }

  T3 with(VarIndex x, Natural value, const Formula& body) {
    env_.emplace_back(x, std::move(value));
    T3 out = eval(body);
    env_.pop_back();
    return out;
  }

  Natural term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var:
        for (auto it = env_.rbegin(); it != env_.rend(); ++it)
          if (it->first == t.index()) return it->second;
        throw OpenFormulaError("unbound variable x" + std::to_string(t.index()));
      case Term::Kind::Zero: return 0;
      case Term::Kind::Succ: return term(t.arg()) + 1;
      case Term::Kind::Plus: return term(t.arg(0)) + term(t.arg(1));
      case Term::Kind::Times: return term(t.arg(0)) * term(t.arg(1));
      case Term::Kind::NumLit: return t.value();
      case Term::Kind::Diag: return diag_fn(term(t.arg()));
    }
    return 0;
  }

  const KOracle& oracle_;
  const EvalOptions& o_;
  vm::Registry& reg_;
  std::uint64_t fuel_;
  std::vector<std::pair<VarIndex, Natural>> env_;
};

}  // namespace

TruthValue3 std_eval(const Formula& phi, const KOracle& oracle, const EvalOptions& options) {
  if (!phi.is_closed()) throw OpenFormulaError("open formula: " + to_string(phi));
  vm::Registry& reg = options.registry ? *options.registry : standard_registry();
  // Deepening keeps the result monotone in the limits: each stage is a fixed
  // traversal, and a larger budget replays every earlier stage first.
  std::uint64_t top = std::max(options.search_limit, options.bounded_limit);
  for (std::uint64_t l = 1;; l *= 2) {
    EvalOptions stage = options;
    stage.search_limit = std::min(l, options.search_limit);
    stage.bounded_limit = std::min(l, options.bounded_limit);
    TruthValue3 v = Evaluator(oracle, stage, reg).eval(phi);
    if (v != TruthValue3::Unknown || l >= top) return v;
  }
}

TruthValue3 std_eval(const Formula& phi, std::uint64_t budget, const KOracle& oracle) {
  return std_eval(phi, oracle, EvalOptions::from_budget(budget));
}

}  // namespace dichotomy
