#include "dichotomy/calculus/recognizer.hpp"

#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/ground_eval.hpp"
#include "dichotomy/syntax/substitution.hpp"

namespace dichotomy {

namespace {

using K = Formula::Kind;

bool is_imp(const Formula& f) { return f.is(K::Imp); }

// Subterm of `b` found where `a` has its first free occurrence of x.
std::optional<Term> find_image(const Term& a, const Term& b, VarIndex x) {
  if (a.kind() == Term::Kind::Var && a.index() == x) return b;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return std::nullopt;
  for (std::size_t k = 0; k < a.arity(); ++k)
    if (auto t = find_image(a.arg(k), b.arg(k), x)) return t;
  return std::nullopt;
}

std::optional<Term> find_image(const Formula& a, const Formula& b, VarIndex x) {
  if (a.kind() != b.kind() || !contains(a.free_vars(), x)) return std::nullopt;
  switch (a.kind()) {
    case K::Eq:
    case K::InW:
      for (std::size_t k = 0; k < 2; ++k)
        if (auto t = find_image(a.term(k), b.term(k), x)) return t;
      return std::nullopt;
    case K::Not:
    case K::Forall: return find_image(a.sub(), b.sub(), x);
    case K::Imp:
      if (auto t = find_image(a.sub(0), b.sub(0), x)) return t;
      return find_image(a.sub(1), b.sub(1), x);
    case K::KAtom: return std::nullopt;
  }
  return std::nullopt;
}

bool is_qinst(const Formula& f) {
  if (!is_imp(f) || !f.sub(0).is(K::Forall)) return false;
  const Formula& body = f.sub(0).sub();
  VarIndex x = f.sub(0).bound();
  const Formula& rhs = f.sub(1);
  if (auto t = find_image(body, rhs, x)) return substitute(body, x, *t) == rhs;
  return body == rhs;
}

bool is_qdistr(const Formula& f) {
  if (!is_imp(f) || !f.sub(0).is(K::Forall) || !is_imp(f.sub(1))) return false;
  const Formula& all = f.sub(0);
  if (!is_imp(all.sub())) return false;
  const Formula& a = all.sub().sub(0);
  const Formula& b = all.sub().sub(1);
  const Formula& rhs = f.sub(1);
  return rhs.sub(0) == a && rhs.sub(1).is(K::Forall) && rhs.sub(1).bound() == all.bound() &&
         rhs.sub(1).sub() == b && !contains(a.free_vars(), all.bound());
}

struct HoleMatcher {
  const Term& t1;
  const Term& t2;
  std::vector<VarIndex> binders;

  bool hole_allowed() const {
    for (VarIndex v : binders)
      if (contains(t1.free_vars(), v) || contains(t2.free_vars(), v)) return false;
    return true;
  }

  bool terms(const Term& a, const Term& b) {
    if (a == b) return true;
    if (a == t1 && b == t2 && hole_allowed()) return true;
    if (a.kind() != b.kind() || a.arity() != b.arity() || a.arity() == 0) return false;
    for (std::size_t k = 0; k < a.arity(); ++k)
      if (!terms(a.arg(k), b.arg(k))) return false;
    return true;
  }

  bool formulas(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case K::Eq:
      case K::InW: return terms(a.term(0), b.term(0)) && terms(a.term(1), b.term(1));
      case K::Not: return formulas(a.sub(), b.sub());
      case K::Imp: return formulas(a.sub(0), b.sub(0)) && formulas(a.sub(1), b.sub(1));
      case K::Forall: {
        if (a.bound() != b.bound()) return false;
        binders.push_back(a.bound());
        bool ok = formulas(a.sub(), b.sub());
        binders.pop_back();
        return ok;
      }
      case K::KAtom: return a == b;
    }
    return false;
  }
};

bool is_eqsubst(const Formula& f) {
  if (!is_imp(f) || !f.sub(0).is(K::Eq) || !is_imp(f.sub(1))) return false;
  HoleMatcher m{f.sub(0).term(0), f.sub(0).term(1), {}};
  return m.formulas(f.sub(1).sub(0), f.sub(1).sub(1));
}

bool is_eqrefl(const Formula& f) {
  if (!f.is(K::Forall) || !f.sub().is(K::Eq)) return false;
  Term x = Term::var(f.bound());
  return f.sub().term(0) == x && f.sub().term(1) == x;
}

bool is_induction(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.sub(1))) return false;
  const Formula& step = f.sub(1).sub(0);
  const Formula& all = f.sub(1).sub(1);
  if (!all.is(K::Forall) || !step.is(K::Forall) || step.bound() != all.bound()) return false;
  return induction_instance(all.sub(), all.bound()) == f;
}

bool is_comp(const Formula& f) {
  if (!f.is(K::Eq) || !f.is_closed()) return false;
  return eval_ground_term(f.term(0)) == eval_ground_term(f.term(1));
}

bool is_kmp(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.sub(1))) return false;
  const Formula& ka = f.sub(1).sub(0);
  const Formula& kb = f.sub(1).sub(1);
  if (!f.sub(0).is(K::KAtom) || !ka.is(K::KAtom) || !kb.is(K::KAtom)) return false;
  const Formula& inner = f.sub(0).sub();
  return is_imp(inner) && inner.sub(0) == ka.sub() && inner.sub(1) == kb.sub();
}

bool is_factivity(const Formula& f) {
  return is_imp(f) && f.sub(0).is(K::KAtom) && f.sub(0).sub() == f.sub(1);
}

bool is_gnum(const Formula& f, const Natural& e) {
  auto parts = match_iff(f);
  if (!parts || !parts->left.is(K::KAtom)) return false;
  return gnum_instance(parts->left.sub(), e) == f;
}

bool is_arith_body(const Formula& f) {
  for (const Formula& ax : pa_axioms())
    if (ax == f) return true;
  return is_induction(f) || is_comp(f);
}

}  // namespace

const std::vector<Formula>& pa_axioms() {
  static const std::vector<Formula> axioms = [] {
    Term x = Term::var(0), y = Term::var(1), z = Term::zero();
    auto all2 = [](Formula f) { return Formula::forall(0, Formula::forall(1, std::move(f))); };
    return std::vector<Formula>{
        Formula::forall(0, Formula::negation(Formula::eq(Term::succ(x), z))),
        all2(Formula::implies(Formula::eq(Term::succ(x), Term::succ(y)), Formula::eq(x, y))),
        Formula::forall(0, Formula::eq(Term::plus(x, z), x)),
        all2(Formula::eq(Term::plus(x, Term::succ(y)), Term::succ(Term::plus(x, y)))),
        Formula::forall(0, Formula::eq(Term::times(x, z), z)),
        all2(Formula::eq(Term::times(x, Term::succ(y)), Term::plus(Term::times(x, y), x))),
    };
  }();
  return axioms;
}

Formula induction_instance(const Formula& phi, VarIndex x) {
  Term v = Term::var(x);
  Formula base = substitute(phi, x, Term::zero());
  Formula step = Formula::forall(x, Formula::implies(phi, substitute(phi, x, Term::succ(v))));
  return Formula::implies(base, Formula::implies(step, Formula::forall(x, phi)));
}

Formula gnum_instance(const Formula& a, const Natural& e) {
  return Formula::iff(Formula::known(a), Formula::in(Term::num(encode(a)), Term::num(e)));
}

bool is_logic_instance(Schema schema, const Formula& f) {
  switch (schema) {
    case Schema::PropAx1:
      return is_imp(f) && is_imp(f.sub(1)) && f.sub(1).sub(1) == f.sub(0);
    case Schema::PropAx2: {
      if (!is_imp(f) || !is_imp(f.sub(0)) || !is_imp(f.sub(1))) return false;
      const Formula& l = f.sub(0);  // A -> (B -> C)
      const Formula& r = f.sub(1);  // (A -> B) -> (A -> C)
      if (!is_imp(l.sub(1)) || !is_imp(r.sub(0)) || !is_imp(r.sub(1))) return false;
      const Formula& a = l.sub(0);
      const Formula& b = l.sub(1).sub(0);
      const Formula& c = l.sub(1).sub(1);
      return r.sub(0).sub(0) == a && r.sub(0).sub(1) == b && r.sub(1).sub(0) == a &&
             r.sub(1).sub(1) == c;
    }
    case Schema::PropAx3: {
      // (~B -> ~A) -> ((~B -> A) -> B)
      if (!is_imp(f) || !is_imp(f.sub(0)) || !is_imp(f.sub(1)) || !is_imp(f.sub(1).sub(0)))
        return false;
      const Formula& l = f.sub(0);
      const Formula& m = f.sub(1).sub(0);
      const Formula& b = f.sub(1).sub(1);
      if (!l.sub(0).is(K::Not) || !l.sub(1).is(K::Not)) return false;
      return l.sub(0).sub() == b && m.sub(0) == l.sub(0) && m.sub(1) == l.sub(1).sub();
    }
    case Schema::QInst: return is_qinst(f);
    case Schema::QDistr: return is_qdistr(f);
    case Schema::EqRefl: return is_eqrefl(f);
    case Schema::EqSubst: return is_eqsubst(f);
    default: return false;
  }
}

bool is_theory_instance(const SchemaId& id, const Formula& f, const Formula* witness) {
  switch (id.kind) {
    case Schema::PAAxiom:
      for (const Formula& ax : pa_axioms())
        if (ax == f) return true;
      return false;
    case Schema::Induction: return is_induction(f);
    case Schema::Comp: return is_comp(f);
    case Schema::KT: return f.is(K::KAtom) && witness && *witness == f.sub();
    case Schema::KMP: return is_kmp(f);
    case Schema::KArith: return f.is(K::KAtom) && is_arith_body(f.sub());
    case Schema::Closure: {
      if (!f.is(K::KAtom)) return false;
      const Formula& body = f.sub();
      return is_theory_instance({Schema::KT}, body, witness) || is_kmp(body) ||
             is_theory_instance({Schema::KArith}, body);
    }
    case Schema::Factivity: return is_factivity(f);
    case Schema::KFactivity: return f.is(K::KAtom) && is_factivity(f.sub());
    case Schema::GNum: return is_gnum(f, id.e);
    case Schema::KGNum: return f.is(K::KAtom) && is_gnum(f.sub(), id.e);
    default: return false;
  }
}

std::optional<SchemaId> is_axiom_instance(const TheorySpec& theory, const Formula& f,
                                          const Proof* witness) {
  for (int k = 0; k < kFirstTheorySchema; ++k)
    if (is_logic_instance(static_cast<Schema>(k), f)) return SchemaId{static_cast<Schema>(k)};
  std::optional<Formula> proved;
  if (witness && check_proof(TheorySpec(), *witness)) proved = witness->conclusion();
  for (Schema s : theory.schemas()) {
    SchemaId id{s, theory.e()};
    if (is_theory_instance(id, f, proved ? &*proved : nullptr)) return id;
  }
  return std::nullopt;
}

}  // namespace dichotomy
