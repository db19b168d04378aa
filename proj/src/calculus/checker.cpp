#include <algorithm>
#include <iterator>

#include "dichotomy/calculus/proof.hpp"
#include "dichotomy/calculus/recognizer.hpp"

namespace dichotomy {

namespace {

VarSet unite(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

using FailedLemmas = std::unordered_map<std::string, std::string>;

CheckResult reject(std::size_t k, std::string reason) { return {false, k + 1, std::move(reason)}; }

CheckResult check(const TheorySpec& theory, const std::vector<Step>& steps, const LemmaTable& lemmas,
                  const FailedLemmas& failed) {
  if (steps.empty()) return {false, 1, "empty proof"};
  // Free variables of the theory axioms each step rests on.
  std::vector<VarSet> taint(steps.size());
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Formula& f = steps[k].formula;
    const Justification& j = steps[k].justification;
    if (auto* ax = std::get_if<LogicAxiom>(&j)) {
      if (!is_logic_schema(ax->schema)) return reject(k, "not a logical schema");
      if (!is_logic_instance(ax->schema, f))
        return reject(k, "not an instance of " + std::string(schema_name(ax->schema)));
    } else if (auto* ax = std::get_if<TheoryAxiom>(&j)) {
      const SchemaId& id = ax->schema;
      std::string name(schema_name(id.kind));
      if (is_logic_schema(id.kind)) return reject(k, name + " is not a theory schema");
      if (!theory.contains(id)) return reject(k, name + " is not in the theory");
      const Formula* witness = nullptr;
      if (!ax->lemma.empty()) {
        if (auto bad = failed.find(ax->lemma); bad != failed.end())
          return reject(k, "lemma " + ax->lemma + " " + bad->second);
        auto it = lemmas.find(ax->lemma);
        if (it == lemmas.end()) return reject(k, "unknown lemma " + ax->lemma);
        witness = &it->second;
      } else if (id.kind == Schema::KT) {
        return reject(k, "KT needs a lemma");
      }
      if (!is_theory_instance(id, f, witness)) return reject(k, "not an instance of " + name);
      taint[k] = f.free_vars();
    } else if (auto* mp = std::get_if<ModusPonens>(&j)) {
      if (mp->premise >= k || mp->implication >= k) return reject(k, "modus ponens refers forward");
      const Formula& imp = steps[mp->implication].formula;
      if (!imp.is(Formula::Kind::Imp)) return reject(k, "modus ponens on a non-implication");
      if (imp.sub(0) != steps[mp->premise].formula)
        return reject(k, "modus ponens premise does not match antecedent");
      if (imp.sub(1) != f) return reject(k, "modus ponens conclusion does not match consequent");
      taint[k] = unite(taint[mp->premise], taint[mp->implication]);
    } else {
      const auto& g = std::get<Generalization>(j);
      if (g.step >= k) return reject(k, "generalization refers forward");
      if (f != Formula::forall(g.var, steps[g.step].formula))
        return reject(k, "generalization does not match");
      if (contains(taint[g.step], g.var))
        return reject(k, "generalization over x" + std::to_string(g.var) +
                             ", free in a theory axiom it depends on");
      taint[k] = taint[g.step];
    }
  }
  return {};
}

}  // namespace

const Lemma* Proof::find_lemma(std::string_view name) const {
  for (const Lemma& l : lemmas)
    if (l.name == name) return &l;
  return nullptr;
}

CheckResult check_steps(const TheorySpec& theory, const std::vector<Step>& steps,
                        const LemmaTable& lemmas) {
  return check(theory, steps, lemmas, {});
}

CheckResult check_proof(const TheorySpec& theory, const Proof& proof) {
  LemmaTable good;
  FailedLemmas failed;
  for (const Lemma& l : proof.lemmas) {
    if (good.count(l.name) || failed.count(l.name)) {
      good.erase(l.name);
      failed[l.name] = "is defined twice";
      continue;
    }
    CheckResult r = check(TheorySpec(), l.steps, {}, {});
    if (r)
      good.emplace(l.name, l.steps.back().formula);
    else
      failed[l.name] = "rejected at its step " + std::to_string(r.step) + ": " + r.reason;
  }
  return check(theory, proof.steps, good, failed);
}

}  // namespace dichotomy
