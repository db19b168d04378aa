#include "dichotomy/syntax/ast.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace dichotomy {

namespace {

std::size_t mix(std::size_t h, std::size_t v) noexcept {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

VarSet merge(const VarSet& a, const VarSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  VarSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VarSet without(const VarSet& a, VarIndex v) {
  VarSet out;
  out.reserve(a.size());
  for (VarIndex x : a)
    if (x != v) out.push_back(x);
  return out;
}

VarSet with(const VarSet& a, VarIndex v) {
  if (contains(a, v)) return a;
  VarSet out = a;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

bool contains(const VarSet& set, VarIndex v) noexcept {
  return std::binary_search(set.begin(), set.end(), v);
}

struct Term::Node {
  Kind kind;
  VarIndex index = 0;
  Natural value;
  std::vector<Term> args;
  std::size_t hash = 0;
  VarSet fv;
};

struct Formula::Node {
  Kind kind;
  VarIndex bound = 0;
  std::vector<Term> terms;
  std::vector<Formula> subs;
  std::size_t hash = 0;
  VarSet fv;
  VarSet vars;
};

// ---- Term ---------------------------------------------------------------

namespace {

std::shared_ptr<Term::Node> term_node(Term::Kind kind, std::vector<Term> args) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  n->hash = mix(0x51ed27, static_cast<std::size_t>(kind));
  for (const Term& a : args) {
    n->hash = mix(n->hash, a.hash());
    n->fv = merge(n->fv, a.free_vars());
  }
  n->args = std::move(args);
  return n;
}

}  // namespace

Term Term::var(VarIndex i) {
  auto n = term_node(Kind::Var, {});
  n->index = i;
  n->hash = mix(n->hash, i);
  n->fv = {i};
  return Term(std::move(n));
}

Term Term::zero() {
  static const Term z(term_node(Kind::Zero, {}));
  return z;
}

Term Term::succ(Term t) { return Term(term_node(Kind::Succ, {std::move(t)})); }
Term Term::plus(Term a, Term b) { return Term(term_node(Kind::Plus, {std::move(a), std::move(b)})); }
Term Term::times(Term a, Term b) { return Term(term_node(Kind::Times, {std::move(a), std::move(b)})); }
Term Term::diag(Term t) { return Term(term_node(Kind::Diag, {std::move(t)})); }

Term Term::num(Natural v) {
  if (v < 0) throw std::invalid_argument("numeral must be a natural");
  auto n = term_node(Kind::NumLit, {});
  n->hash = mix(n->hash, hash_natural(v));
  n->value = std::move(v);
  return Term(std::move(n));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

VarIndex Term::index() const {
  if (node_->kind != Kind::Var) throw std::logic_error("Term::index on non-variable");
  return node_->index;
}

const Natural& Term::value() const {
  if (node_->kind != Kind::NumLit) throw std::logic_error("Term::value on non-numeral");
  return node_->value;
}

const Term& Term::arg(std::size_t i) const { return node_->args.at(i); }
std::size_t Term::arity() const noexcept { return node_->args.size(); }
std::size_t Term::hash() const noexcept { return node_->hash; }
const VarSet& Term::free_vars() const noexcept { return node_->fv; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind) return false;
  switch (x.kind) {
    case Term::Kind::Var:
      return x.index == y.index;
    case Term::Kind::NumLit:
      return x.value == y.value;
    default:
      return x.args == y.args;
  }
}

// ---- Formula ------------------------------------------------------------

namespace {

std::shared_ptr<Formula::Node> formula_node(Formula::Kind kind, std::vector<Term> terms,
                                            std::vector<Formula> subs) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->hash = mix(0xf0f0a1, static_cast<std::size_t>(kind));
  for (const Term& t : terms) {
    n->hash = mix(n->hash, t.hash());
    n->fv = merge(n->fv, t.free_vars());
  }
  if (kind != Formula::Kind::KAtom) {
    n->vars = n->fv;
    for (const Formula& f : subs) {
      n->fv = merge(n->fv, f.free_vars());
      n->vars = merge(n->vars, f.all_vars());
    }
  }
  for (const Formula& f : subs) n->hash = mix(n->hash, f.hash());
  n->terms = std::move(terms);
  n->subs = std::move(subs);
  return n;
}

}  // namespace

Formula Formula::eq(Term a, Term b) { return Formula(formula_node(Kind::Eq, {std::move(a), std::move(b)}, {})); }
Formula Formula::in(Term m, Term i) { return Formula(formula_node(Kind::InW, {std::move(m), std::move(i)}, {})); }
Formula Formula::negation(Formula f) { return Formula(formula_node(Kind::Not, {}, {std::move(f)})); }
Formula Formula::implies(Formula a, Formula b) {
  return Formula(formula_node(Kind::Imp, {}, {std::move(a), std::move(b)}));
}
Formula Formula::known(Formula f) { return Formula(formula_node(Kind::KAtom, {}, {std::move(f)})); }

Formula Formula::forall(VarIndex v, Formula body) {
  auto n = formula_node(Kind::Forall, {}, {std::move(body)});
  n->bound = v;
  n->hash = mix(n->hash, v);
  n->fv = without(n->fv, v);
  n->vars = with(n->vars, v);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) { return negation(implies(std::move(a), negation(std::move(b)))); }
Formula Formula::disj(Formula a, Formula b) { return implies(negation(std::move(a)), std::move(b)); }
Formula Formula::iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }
Formula Formula::exists(VarIndex v, Formula body) {
  return negation(forall(v, negation(std::move(body))));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
const Term& Formula::term(std::size_t i) const { return node_->terms.at(i); }
const Formula& Formula::sub(std::size_t i) const { return node_->subs.at(i); }

VarIndex Formula::bound() const {
  if (node_->kind != Kind::Forall) throw std::logic_error("Formula::bound on non-quantifier");
  return node_->bound;
}

std::size_t Formula::hash() const noexcept { return node_->hash; }
const VarSet& Formula::free_vars() const noexcept { return node_->fv; }
const VarSet& Formula::all_vars() const noexcept { return node_->vars; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.bound != y.bound) return false;
  return x.terms == y.terms && x.subs == y.subs;
}

std::optional<Conjunction> match_conj(const Formula& f) {
  if (!f.is(Formula::Kind::Not)) return std::nullopt;
  const Formula& imp = f.sub();
  if (!imp.is(Formula::Kind::Imp) || !imp.sub(1).is(Formula::Kind::Not)) return std::nullopt;
  return Conjunction{imp.sub(0), imp.sub(1).sub()};
}

std::optional<Conjunction> match_iff(const Formula& f) {
  auto c = match_conj(f);
  if (!c || !c->left.is(Formula::Kind::Imp) || !c->right.is(Formula::Kind::Imp)) return std::nullopt;
  const Formula& a = c->left.sub(0);
  const Formula& b = c->left.sub(1);
  if (c->right.sub(0) != b || c->right.sub(1) != a) return std::nullopt;
  return Conjunction{a, b};
}

Formula universal_closure(const Formula& f) {
  Formula out = f;
  const VarSet& fv = f.free_vars();
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

}  // namespace dichotomy
