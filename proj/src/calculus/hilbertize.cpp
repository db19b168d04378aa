#include "dichotomy/calculus/hilbertize.hpp"

#include <algorithm>
#include <iterator>

#include "dichotomy/syntax/printer.hpp"

namespace dichotomy {

// ProofBuilder

std::size_t ProofBuilder::add(const Formula& f, const Justification& j) {
  if (auto it = index_.find(f); it != index_.end()) return it->second;
  steps_.push_back({f, j});
  index_.emplace(f, steps_.size() - 1);
  return steps_.size() - 1;
}

std::size_t ProofBuilder::splice(const Proof& p) {
  for (const Lemma& l : p.lemmas) add_lemma(l);
  std::vector<std::size_t> map(p.steps.size());
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    Justification j = p.steps[k].justification;
    if (auto* mp = std::get_if<ModusPonens>(&j)) {
      mp->premise = map.at(mp->premise);
      mp->implication = map.at(mp->implication);
    } else if (auto* g = std::get_if<Generalization>(&j)) {
      g->step = map.at(g->step);
    }
    map[k] = add(p.steps[k].formula, j);
  }
  return map.back();
}

void ProofBuilder::add_lemma(const Lemma& lemma) {
  for (const Lemma& l : lemmas_) {
    if (l.name != lemma.name) continue;
    bool same = l.steps.size() == lemma.steps.size();
    for (std::size_t k = 0; same && k < l.steps.size(); ++k)
      same = l.steps[k].formula == lemma.steps[k].formula;
    if (!same) throw ScriptError("two different lemmas named " + lemma.name);
    return;
  }
  lemmas_.push_back(lemma);
}

Proof ProofBuilder::build(std::size_t conclusion) const {
  std::vector<bool> keep(steps_.size(), false);
  keep.at(conclusion) = true;
  for (std::size_t k = conclusion + 1; k-- > 0;) {
    if (!keep[k]) continue;
    const Justification& j = steps_[k].justification;
    if (auto* mp = std::get_if<ModusPonens>(&j)) {
      keep[mp->premise] = true;
      keep[mp->implication] = true;
    } else if (auto* g = std::get_if<Generalization>(&j)) {
      keep[g->step] = true;
    }
  }
  Proof out;
  std::vector<std::size_t> renumber(steps_.size());
  for (std::size_t k = 0; k <= conclusion; ++k) {
    if (!keep[k]) continue;
    Justification j = steps_[k].justification;
    if (auto* mp = std::get_if<ModusPonens>(&j)) {
      mp->premise = renumber[mp->premise];
      mp->implication = renumber[mp->implication];
    } else if (auto* g = std::get_if<Generalization>(&j)) {
      g->step = renumber[g->step];
    } else if (auto* ax = std::get_if<TheoryAxiom>(&j); ax && !ax->lemma.empty()) {
      if (!out.find_lemma(ax->lemma))
        for (const Lemma& l : lemmas_)
          if (l.name == ax->lemma) out.lemmas.push_back(l);
    }
    renumber[k] = out.steps.size();
    out.steps.push_back({steps_[k].formula, j});
  }
  return out;
}

// Script

Script::Line Script::push(Node n) {
  n.scope = current_scope();
  nodes_.push_back(std::move(n));
  return nodes_.size() - 1;
}

void Script::require_live(Line l) const {
  if (l >= nodes_.size()) throw ScriptError("no such line");
  if (closed_[nodes_[l].scope]) throw ScriptError("line from a discharged scope");
}

std::vector<std::size_t> Script::hyps_of(std::initializer_list<Line> premises) const {
  std::vector<std::size_t> out;
  for (Line p : premises) {
    std::vector<std::size_t> merged;
    std::set_union(out.begin(), out.end(), nodes_[p].hyps.begin(), nodes_[p].hyps.end(),
                   std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

Script::Line Script::assume(const Formula& hypothesis) {
  std::size_t id = closed_.size();
  closed_.push_back(false);
  Node n{hypothesis, Kind::Hyp, LogicAxiom{Schema::PropAx1}, 0, 0, 0, 0, {}};
  nodes_.push_back(std::move(n));
  Line l = nodes_.size() - 1;
  nodes_[l].scope = id;
  nodes_[l].hyps = {l};
  scopes_.push_back({id, l});
  return l;
}

Script::Line Script::logic(Schema schema, const Formula& f) { return axiom(f, LogicAxiom{schema}); }

Script::Line Script::theory(const SchemaId& schema, const Formula& f, const std::string& lemma) {
  return axiom(f, TheoryAxiom{schema, lemma});
}

Script::Line Script::axiom(const Formula& f, const Justification& j) {
  if (!std::holds_alternative<LogicAxiom>(j) && !std::holds_alternative<TheoryAxiom>(j))
    throw ScriptError("axiom needs an axiom justification");
  return push(Node{f, Kind::Axiom, j, 0, 0, 0, 0, {}});
}

Script::Line Script::mp(Line premise, Line implication) {
  require_live(premise);
  require_live(implication);
  const Formula& imp = nodes_[implication].formula;
  if (!imp.is(Formula::Kind::Imp) || imp.sub(0) != nodes_[premise].formula)
    throw ScriptError("modus ponens mismatch: " + to_string(nodes_[premise].formula) + " against " +
                      to_string(imp));
  Node n{imp.sub(1), Kind::MP, LogicAxiom{Schema::PropAx1}, premise, implication, 0, 0, {}};
  n.hyps = hyps_of({premise, implication});
  return push(std::move(n));
}

Script::Line Script::gen(Line line, VarIndex var) {
  require_live(line);
  for (std::size_t h : nodes_[line].hyps)
    if (contains(nodes_[h].formula.free_vars(), var))
      throw ScriptError("generalization over x" + std::to_string(var) + ", free in a hypothesis");
  Node n{Formula::forall(var, nodes_[line].formula), Kind::Gen, LogicAxiom{Schema::PropAx1}, line, 0, var, 0, {}};
  n.hyps = nodes_[line].hyps;
  return push(std::move(n));
}

Script::Line Script::use(const Proof& proof) {
  if (proof.steps.empty()) throw ScriptError("empty proof");
  used_.push_back(proof);
  Node n{proof.conclusion(), Kind::Use, LogicAxiom{Schema::PropAx1}, used_.size() - 1, 0, 0, 0, {}};
  return push(std::move(n));
}

void Script::lemma(const Lemma& lemma) { lemmas_.push_back(lemma); }

Script::Line Script::identity_in_parent(const Formula& h) {
  // A -> ((A -> A) -> A), A2, mp, A -> (A -> A), mp
  Formula aa = Formula::implies(h, h);
  Line s1 = logic(Schema::PropAx1, Formula::implies(h, Formula::implies(aa, h)));
  Line s2 = logic(Schema::PropAx2,
                  Formula::implies(nodes_[s1].formula,
                                   Formula::implies(Formula::implies(h, aa), aa)));
  Line s3 = mp(s1, s2);
  Line s4 = logic(Schema::PropAx1, Formula::implies(h, aa));
  return mp(s4, s3);
}

Script::Line Script::lift_constant(Line d, Formula h) {
  Formula f = nodes_[d].formula;
  Line a1 = logic(Schema::PropAx1, Formula::implies(f, Formula::implies(h, f)));
  return mp(d, a1);
}

Script::Line Script::direct(Line n, std::size_t scope, Memo& memo) {
  if (nodes_[n].scope != scope) return n;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const Node copy = nodes_[n];
  Line out;
  switch (copy.kind) {
    case Kind::MP: {
      Line p = direct(copy.a, scope, memo);
      out = mp(p, direct(copy.b, scope, memo));
      break;
    }
    case Kind::Gen: out = gen(direct(copy.a, scope, memo), copy.var); break;
    case Kind::Use: out = push(Node{copy.formula, Kind::Use, copy.justification, copy.a, 0, 0, 0, {}}); break;
    case Kind::Axiom: out = axiom(copy.formula, copy.justification); break;
    case Kind::Hyp: throw ScriptError("internal: hypothesis outside its scope");
  }
  memo.emplace(n, out);
  return out;
}

Script::Line Script::lifted(Line n, const Scope& sc, Memo& lift_memo, Memo& memo) {
  if (auto it = lift_memo.find(n); it != lift_memo.end()) return it->second;
  const Node copy = nodes_[n];
  const Formula h = nodes_[sc.hyp].formula;
  auto depends = [&](Line l) { return std::binary_search(nodes_[l].hyps.begin(), nodes_[l].hyps.end(), sc.hyp); };
  auto lift = [&](Line l) {
    return depends(l) ? lifted(l, sc, lift_memo, memo) : lift_constant(direct(l, sc.id, memo), h);
  };
  Line out;
  if (n == sc.hyp) {
    out = identity_in_parent(h);
  } else if (copy.kind == Kind::MP) {
    Line lp = lift(copy.a);
    Line lq = lift(copy.b);
    const Formula& p = nodes_[copy.a].formula;
    Formula hp = Formula::implies(h, p);
    Formula hn = Formula::implies(h, copy.formula);
    Line a2 = logic(Schema::PropAx2,
                    Formula::implies(Formula::implies(h, Formula::implies(p, copy.formula)),
                                     Formula::implies(hp, hn)));
    out = mp(lp, mp(lq, a2));
  } else if (copy.kind == Kind::Gen) {
    if (contains(h.free_vars(), copy.var))
      throw ScriptError("generalization over x" + std::to_string(copy.var) + ", free in a hypothesis");
    Line lp = lifted(copy.a, sc, lift_memo, memo);
    Line g = gen(lp, copy.var);
    const Formula& body = nodes_[copy.a].formula;
    Line qd = logic(Schema::QDistr,
                    Formula::implies(nodes_[g].formula,
                                     Formula::implies(h, Formula::forall(copy.var, body))));
    out = mp(g, qd);
  } else {
    throw ScriptError("internal: closed line depends on a hypothesis");
  }
  lift_memo.emplace(n, out);
  return out;
}

Script::Line Script::discharge(Line conclusion) {
  if (scopes_.empty()) throw ScriptError("discharge without an open assumption");
  require_live(conclusion);
  Scope sc = scopes_.back();
  scopes_.pop_back();
  closed_[sc.id] = true;
  Memo memo, lift_memo;
  const auto& hyps = nodes_[conclusion].hyps;
  if (std::binary_search(hyps.begin(), hyps.end(), sc.hyp))
    return lifted(conclusion, sc, lift_memo, memo);
  Line d = direct(conclusion, sc.id, memo);
  return lift_constant(d, nodes_[sc.hyp].formula);
}

Proof Script::finish(Line conclusion) {
  require_live(conclusion);
  while (!scopes_.empty()) conclusion = discharge(conclusion);
  ProofBuilder builder;
  for (const Lemma& l : lemmas_) builder.add_lemma(l);
  Memo emitted;
  auto emit = [&](auto&& self, Line n) -> std::size_t {
    if (auto it = emitted.find(n); it != emitted.end()) return it->second;
    const Node& node = nodes_[n];
    std::size_t out = 0;
    switch (node.kind) {
      case Kind::Axiom: out = builder.add(node.formula, node.justification); break;
      case Kind::Use: out = builder.splice(used_[node.a]); break;
      case Kind::MP: {
        std::size_t p = self(self, node.a);
        std::size_t q = self(self, node.b);
        out = builder.add(node.formula, ModusPonens{p, q});
        break;
      }
      case Kind::Gen: out = builder.add(node.formula, Generalization{self(self, node.a), node.var}); break;
      case Kind::Hyp: throw ScriptError("internal: undischarged hypothesis");
    }
    emitted.emplace(n, out);
    return out;
  };
  return builder.build(emit(emit, conclusion));
}

}  // namespace dichotomy
