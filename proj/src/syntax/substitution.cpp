#include "dichotomy/syntax/substitution.hpp"

#include <algorithm>

namespace dichotomy {

VarIndex smallest_fresh(const VarSet& avoid) {
  VarIndex k = 0;
  for (VarIndex v : avoid) {
    if (v != k) break;
    ++k;
  }
  return k;
}

Term substitute(const Term& t, VarIndex var, const Term& replacement) {
  if (!contains(t.free_vars(), var)) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      return replacement;
    case Term::Kind::Succ:
      return Term::succ(substitute(t.arg(), var, replacement));
    case Term::Kind::Diag:
      return Term::diag(substitute(t.arg(), var, replacement));
    case Term::Kind::Plus:
      return Term::plus(substitute(t.arg(0), var, replacement), substitute(t.arg(1), var, replacement));
    case Term::Kind::Times:
      return Term::times(substitute(t.arg(0), var, replacement), substitute(t.arg(1), var, replacement));
    case Term::Kind::Zero:
    case Term::Kind::NumLit:
      break;
  }
  return t;
}

Formula substitute(const Formula& f, VarIndex var, const Term& replacement) {
  if (!contains(f.free_vars(), var)) return f;
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return Formula::eq(substitute(f.term(0), var, replacement), substitute(f.term(1), var, replacement));
    case Formula::Kind::InW:
      return Formula::in(substitute(f.term(0), var, replacement), substitute(f.term(1), var, replacement));
    case Formula::Kind::Not:
      return Formula::negation(substitute(f.sub(), var, replacement));
    case Formula::Kind::Imp:
      return Formula::implies(substitute(f.sub(0), var, replacement), substitute(f.sub(1), var, replacement));
    case Formula::Kind::Forall: {
      const VarIndex bound = f.bound();
      const Formula& body = f.sub();
      if (!contains(replacement.free_vars(), bound)) {
        return Formula::forall(bound, substitute(body, var, replacement));
      }
      VarSet avoid = replacement.free_vars();
      avoid.insert(avoid.end(), body.free_vars().begin(), body.free_vars().end());
      avoid.push_back(var);
      std::sort(avoid.begin(), avoid.end());
      avoid.erase(std::unique(avoid.begin(), avoid.end()), avoid.end());
      const VarIndex fresh = smallest_fresh(avoid);
      Formula renamed = substitute(body, bound, Term::var(fresh));
      return Formula::forall(fresh, substitute(renamed, var, replacement));
    }
    case Formula::Kind::KAtom:
      break;
  }
  return f;
}

}  // namespace dichotomy
