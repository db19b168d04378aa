#include "dichotomy/calculus/enumerator.hpp"

#include <algorithm>
#include <array>
#include <iterator>

#include "dichotomy/calculus/recognizer.hpp"
#include "dichotomy/syntax/code_order.hpp"
#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/ground_eval.hpp"
#include "dichotomy/syntax/substitution.hpp"

namespace dichotomy {

struct ConsequenceEnumerator::Node {
  enum class Origin : std::uint8_t { Logic, Theory, MP, Gen };
  explicit Node(Formula f) : formula(std::move(f)) {}
  Formula formula;
  VarSet taint;
  Origin origin = Origin::Logic;
  Schema schema = Schema::PropAx1;
  std::uint32_t a = 0, b = 0;
  VarIndex var = 0;
  std::int64_t witness = -1;  // pure stream index backing a KT body
};

struct ConsequenceEnumerator::Cursor {
  Schema schema;
  std::uint64_t n = 0;
  bool done = false;
};

namespace {


template <std::size_t N>
std::array<std::uint64_t, N> untuple(std::uint64_t n) {
  std::array<std::uint64_t, N> out{};
  for (std::size_t k = 0; k + 1 < N; ++k) {
    auto [a, rest] = cantor_unpair(n);
    out[k] = a;
    n = rest;
  }
  out[N - 1] = n;
  return out;
}

Formula imp(const Formula& a, const Formula& b) { return Formula::implies(a, b); }
Formula neg(const Formula& a) { return Formula::negation(a); }
Formula F(std::uint64_t i) { return formula_at(static_cast<std::size_t>(i)); }
Term T(std::uint64_t i) { return term_at(static_cast<std::size_t>(i)); }
VarIndex V(std::uint64_t i) { return static_cast<VarIndex>(i); }

std::optional<Formula> comp_instance(std::uint64_t n) {
  auto [i, j] = untuple<2>(n);
  Term a = T(i), b = T(j);
  if (!a.is_closed() || !b.is_closed()) return std::nullopt;
  if (eval_ground_term(a) != eval_ground_term(b)) return std::nullopt;
  return Formula::eq(a, b);
}

std::optional<Formula> arith_instance(std::uint64_t n) {
  std::uint64_t m = n / 3;
  switch (n % 3) {
    case 0:
      if (m < pa_axioms().size()) return pa_axioms()[m];
      return std::nullopt;
    case 1: {
      auto [x, i] = untuple<2>(m);
      return induction_instance(F(i), V(x));
    }
    default: return comp_instance(m);
  }
}

Formula kmp_instance(std::uint64_t n) {
  auto [i, j] = untuple<2>(n);
  Formula a = F(i), b = F(j);
  return imp(Formula::known(imp(a, b)), imp(Formula::known(a), Formula::known(b)));
}

VarSet unite(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ConsequenceEnumerator::ConsequenceEnumerator(TheorySpec theory) : theory_(std::move(theory)) {
  for (int k = 0; k < kFirstTheorySchema; ++k) cursors_.push_back({static_cast<Schema>(k)});
  for (Schema s : theory_.schemas()) cursors_.push_back({s});
}

ConsequenceEnumerator::~ConsequenceEnumerator() = default;
ConsequenceEnumerator::ConsequenceEnumerator(ConsequenceEnumerator&&) noexcept = default;
ConsequenceEnumerator& ConsequenceEnumerator::operator=(ConsequenceEnumerator&&) noexcept = default;

const Formula& ConsequenceEnumerator::at(std::size_t i) const { return nodes_[stream_.at(i)].formula; }

const Natural& ConsequenceEnumerator::code_at(std::size_t i) {
  while (codes_.size() <= i) codes_.push_back(encode(at(codes_.size())));
  return codes_[i];
}

std::optional<std::size_t> ConsequenceEnumerator::position(const Formula& f) const {
  auto it = position_.find(f);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::optional<Formula> ConsequenceEnumerator::kt_body(std::uint64_t n) {
  if (!pure_) pure_ = std::make_unique<ConsequenceEnumerator>(TheorySpec());
  if (pure_->size() > n) return pure_->at(static_cast<std::size_t>(n));
  pure_->step();
  return std::nullopt;
}

// Instance number c.n of c's schema. Leaves c.n alone when a KT body is not
// yet available.
std::optional<ConsequenceEnumerator::Node> ConsequenceEnumerator::instance(Cursor& c) {
  const std::uint64_t n = c.n;
  const bool logic = is_logic_schema(c.schema);
  std::int64_t witness_index = -1;
  std::optional<Formula> f;
  bool advance = true;
  switch (c.schema) {
    case Schema::PropAx1: {
      auto [i, j] = untuple<2>(n);
      Formula a = F(i);
      f = imp(a, imp(F(j), a));
      break;
    }
    case Schema::PropAx2: {
      auto [i, j, k] = untuple<3>(n);
      Formula a = F(i), b = F(j), cc = F(k);
      f = imp(imp(a, imp(b, cc)), imp(imp(a, b), imp(a, cc)));
      break;
    }
    case Schema::PropAx3: {
      auto [i, j] = untuple<2>(n);
      Formula a = F(i), b = F(j);
      f = imp(imp(neg(b), neg(a)), imp(imp(neg(b), a), b));
      break;
    }
    case Schema::QInst: {
      auto [x, i, j] = untuple<3>(n);
      Formula phi = F(i);
      f = imp(Formula::forall(V(x), phi), substitute(phi, V(x), T(j)));
      break;
    }
    case Schema::QDistr: {
      auto [x, i, j] = untuple<3>(n);
      Formula a = F(i), b = F(j);
      if (!contains(a.free_vars(), V(x)))
        f = imp(Formula::forall(V(x), imp(a, b)), imp(a, Formula::forall(V(x), b)));
      break;
    }
    case Schema::EqRefl: {
      Term x = Term::var(V(n));
      f = Formula::forall(V(n), Formula::eq(x, x));
      break;
    }
    case Schema::EqSubst: {
      auto [x, i, j, k] = untuple<4>(n);
      Formula phi = F(i);
      Term t1 = T(j), t2 = T(k);
      f = imp(Formula::eq(t1, t2), imp(substitute(phi, V(x), t1), substitute(phi, V(x), t2)));
      break;
    }
    case Schema::PAAxiom:
      if (n < pa_axioms().size()) f = pa_axioms()[n];
      if (n + 1 >= pa_axioms().size()) c.done = true;
      break;
    case Schema::Induction: {
      auto [x, i] = untuple<2>(n);
      f = induction_instance(F(i), V(x));
      break;
    }
    case Schema::Comp: f = comp_instance(n); break;
    case Schema::KT: {
      auto body = kt_body(n);
      if (!body) {
        advance = false;
        break;
      }
      f = Formula::known(*body);
      witness_index = static_cast<std::int64_t>(n);
      break;
    }
    case Schema::KMP: f = kmp_instance(n); break;
    case Schema::KArith:
      if (auto body = arith_instance(n)) f = Formula::known(*body);
      break;
    case Schema::Closure: {
      std::uint64_t m = n / 3;
      std::optional<Formula> body;
      if (n % 3 == 0) {
        auto kt = kt_body(m);
        if (!kt) {
          advance = false;
          break;
        }
        body = Formula::known(*kt);
        witness_index = static_cast<std::int64_t>(m);
      } else if (n % 3 == 1) {
        body = kmp_instance(m);
      } else if (auto arith = arith_instance(m)) {
        body = Formula::known(*arith);
      }
      if (body) f = Formula::known(*body);
      break;
    }
    case Schema::Factivity: {
      Formula a = F(n);
      f = imp(Formula::known(a), a);
      break;
    }
    case Schema::KFactivity: {
      Formula a = F(n);
      f = Formula::known(imp(Formula::known(a), a));
      break;
    }
    case Schema::GNum: f = gnum_instance(F(n), theory_.e()); break;
    case Schema::KGNum: f = Formula::known(gnum_instance(F(n), theory_.e())); break;
  }
  if (advance) ++c.n;
  if (!f) return std::nullopt;
  // Generators are built to produce instances; the recognizer is the judge.
  Node node(std::move(*f));
  node.origin = logic ? Node::Origin::Logic : Node::Origin::Theory;
  node.schema = c.schema;
  node.witness = witness_index;
  if (logic) {
    if (!is_logic_instance(c.schema, node.formula)) return std::nullopt;
  } else {
    std::optional<Formula> witness;
    if (witness_index >= 0) witness = pure_->at(static_cast<std::size_t>(witness_index));
    if (!is_theory_instance({c.schema, theory_.e()}, node.formula, witness ? &*witness : nullptr))
      return std::nullopt;
    node.taint = node.formula.free_vars();
  }
  return node;
}

std::optional<std::size_t> ConsequenceEnumerator::insert(Node node) {
  auto& ids = by_formula_[node.formula];
  for (std::uint32_t id : ids) {
    const VarSet& old = nodes_[id].taint;
    if (std::includes(node.taint.begin(), node.taint.end(), old.begin(), old.end())) return std::nullopt;
  }
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  ids.push_back(id);
  nodes_.push_back(std::move(node));
  const Node& n = nodes_.back();
  const Formula f = n.formula;
  const VarSet taint = n.taint;

  std::optional<std::size_t> emitted;
  if (!position_.count(f)) {
    emitted = stream_.size();
    position_.emplace(f, stream_.size());
    stream_.push_back(id);
  }

  auto modus_ponens = [&](std::uint32_t p, std::uint32_t q) {
    Node m(nodes_[q].formula.sub(1));
    m.origin = Node::Origin::MP;
    m.taint = unite(nodes_[p].taint, nodes_[q].taint);
    m.a = p;
    m.b = q;
    agenda_.push_back(std::move(m));
  };
  if (f.is(Formula::Kind::Imp)) {
    if (auto it = by_formula_.find(f.sub(0)); it != by_formula_.end())
      for (std::uint32_t p : it->second) modus_ponens(p, id);
    by_antecedent_[f.sub(0)].push_back(id);
  }
  if (auto it = by_antecedent_.find(f); it != by_antecedent_.end())
    for (std::uint32_t q : it->second) modus_ponens(id, q);
  for (VarIndex x : f.free_vars()) {
    if (contains(taint, x)) continue;
    Node g(Formula::forall(x, f));
    g.origin = Node::Origin::Gen;
    g.taint = taint;
    g.a = id;
    g.var = x;
    agenda_.push_back(std::move(g));
  }
  return emitted;
}

std::optional<std::size_t> ConsequenceEnumerator::step() {
  const bool inference = (steps_++ % 2 == 1) && !agenda_.empty();
  if (inference) {
    Node n = std::move(agenda_.front());
    agenda_.pop_front();
    return insert(std::move(n));
  }
  while (cursors_[next_cursor_].done) next_cursor_ = (next_cursor_ + 1) % cursors_.size();
  Cursor& c = cursors_[next_cursor_];
  next_cursor_ = (next_cursor_ + 1) % cursors_.size();
  if (auto node = instance(c)) return insert(std::move(*node));
  return std::nullopt;
}

void ConsequenceEnumerator::run_to(std::uint64_t steps) {
  while (steps_ < steps) step();
}

void ConsequenceEnumerator::fill(std::size_t count, std::uint64_t max_steps) {
  while (stream_.size() < count && steps_ < max_steps) step();
}

Lemma ConsequenceEnumerator::lemma_for(const Node& n) const {
  auto w = static_cast<std::size_t>(n.witness);
  return {"w" + std::to_string(w), pure_->proof_of(w).steps};
}

Proof ConsequenceEnumerator::proof_of(std::size_t i) const {
  Proof out;
  std::unordered_map<std::uint32_t, std::size_t> index;
  std::vector<std::pair<std::uint32_t, bool>> stack{{stream_.at(i), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    if (index.count(id)) {
      stack.pop_back();
      continue;
    }
    const Node& n = nodes_[id];
    if (!expanded && (n.origin == Node::Origin::MP || n.origin == Node::Origin::Gen)) {
      stack.back().second = true;
      if (n.origin == Node::Origin::MP) stack.push_back({n.b, false});
      stack.push_back({n.a, false});
      continue;
    }
    stack.pop_back();
    Justification j = LogicAxiom{n.schema};
    switch (n.origin) {
      case Node::Origin::Logic: break;
      case Node::Origin::Theory: {
        TheoryAxiom ax{{n.schema, theory_.e()}, {}};
        if (n.witness >= 0) {
          Lemma l = lemma_for(n);
          ax.lemma = l.name;
          if (!out.find_lemma(l.name)) out.lemmas.push_back(std::move(l));
        }
        j = ax;
        break;
      }
      case Node::Origin::MP: j = ModusPonens{index.at(n.a), index.at(n.b)}; break;
      case Node::Origin::Gen: j = Generalization{index.at(n.a), n.var}; break;
    }
    index.emplace(id, out.steps.size());
    out.steps.push_back({n.formula, j});
  }
  return out;
}

std::vector<Formula> enumerate_consequences(const TheorySpec& theory, std::uint64_t budget) {
  ConsequenceEnumerator e(theory);
  e.run_to(budget);
  std::vector<Formula> out;
  out.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out.push_back(e.at(i));
  return out;
}

}  // namespace dichotomy
