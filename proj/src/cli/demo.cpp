#include "dichotomy/cli/demo.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "dichotomy/calculus/enumerator.hpp"
#include "dichotomy/calculus/proof_io.hpp"
#include "dichotomy/calculus/recognizer.hpp"
#include "dichotomy/machines/machine.hpp"
#include "dichotomy/machines/slash.hpp"
#include "dichotomy/selfref/refutation.hpp"
#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/printer.hpp"
#include "dichotomy/syntax/substitution.hpp"

namespace dichotomy {

namespace {

bool self_knowing_section(const DemoOptions& o, vm::Registry& reg, std::ostream& out, Natural& e_star) {
  SelfKnowing sk = make_self_knowing_machine(reg);
  e_star = sk.e_star;
  out << "[self-knowing machine]\n";
  out << "e* = " << e_star << "\n";
  std::size_t n = o.prefix;
  std::vector<Formula> known = sk.machine.knowledge(n);
  vm::RunResult run = reg.run(e_star, o.vm_budget);
  std::unordered_set<Natural, NaturalHash> w(run.elements.begin(), run.elements.end());
  std::unordered_set<Natural, NaturalHash> k;
  for (const Formula& f : known) k.insert(encode(f));

  // W_e* against an independent enumeration of the theory it names.
  ConsequenceEnumerator en(TheorySpec::sigma_prime_e(e_star));
  en.fill(n, 64 * n + 4096);
  std::unordered_set<Natural, NaturalHash> direct;
  for (std::size_t i = 0; i < en.size(); ++i) direct.insert(en.code_at(i));

  bool ok = known.size() == n && run.elements.size() >= n;
  std::size_t k_in_w = 0, w_in_k = 0, w_in_direct = 0;
  for (const Natural& c : k) k_in_w += w.count(c);
  for (std::size_t i = 0; i < n && i < run.elements.size(); ++i) {
    w_in_k += k.count(run.elements[i]);
    w_in_direct += direct.count(run.elements[i]);
  }
  ok = ok && k_in_w == n && w_in_k == n && w_in_direct == n;
  out << "first " << n << " known codes in W_e* (" << o.vm_budget << " steps): " << k_in_w << "/" << n << "\n";
  out << "first " << n << " elements of W_e* known: " << w_in_k << "/" << n << "\n";
  out << "first " << n << " elements of W_e* derived in sigma_prime_e e=" << e_star << ": " << w_in_direct << "/" << n
      << "\n";

  Formula zz = Formula::eq(Term::zero(), Term::zero());
  Formula g = gnum_instance(zz, e_star);
  bool gk = w.count(encode(g)) && w.count(encode(Formula::known(g)));
  ok = ok && gk;
  out << "knows " << to_string(g) << " and its K-form: " << (gk ? "yes" : "no") << "\n";
  return ok;
}

bool refutation_section(const Natural& e_star, std::ostream& out) {
  out << "[refutation]\n";
  Proof p = build_refutation(e_star);
  TheorySpec sigma = TheorySpec::sigma_e(e_star);
  CheckResult r = check_proof(sigma, p);
  out << "refutation for e=" << e_star << " (" << p.steps.size() << " steps, concludes "
      << to_string(p.conclusion()) << "): " << (r ? "Accept" : "Reject") << "\n";
  if (!r) out << "  step " << r.step << ": " << r.reason << "\n";
  CheckResult weak = check_proof(sigma.without(Schema::KFactivity), p);
  bool at_kf = false;
  if (!weak && weak.step >= 1 && weak.step <= p.steps.size()) {
    const auto* ax = std::get_if<TheoryAxiom>(&p.steps[weak.step - 1].justification);
    at_kf = ax && ax->schema.kind == Schema::KFactivity;
  }
  out << "without KFactivity: " << (weak ? "Accept" : "Reject at step " + std::to_string(weak.step) + " (" +
                                                            (at_kf ? "ax:KFactivity" : "other") + ")")
      << "\n";
  return r.accepted && at_kf;
}

bool slash_section(const DemoOptions& o, std::ostream& out) {
  out << "[slash machine]\n";
  TheorySpec sigma = TheorySpec::sigma_slash();
  EvalOptions eo;
  eo.vm_budget = o.vm_budget;
  eo.search_limit = 64;
  eo.bounded_limit = 256;
  eo.fuel = 20000;
  SlashModel m(sigma, o.budget, eo);
  ConsequenceEnumerator en(sigma);
  en.fill(o.budget, 64 * o.budget + 4096);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < en.size(); ++i) {
    const Formula& f = en.at(i);
    if (f.is_closed() && is_theory_instance({Schema::Factivity}, f)) candidates.push_back(i);
  }
  std::mt19937_64 rng(o.seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::size_t shown = 0;
  for (std::size_t i : candidates) {
    if (shown == o.samples) break;
    const Formula& f = en.at(i);
    if (m.eval(universal_closure(f.sub(1))) == TruthValue3::Unknown) continue;
    TruthValue3 v = m.known(f);
    out << "K(" << to_string(f) << ") = " << to_string(v) << "  [stream " << i << "]\n";
    if (v != TruthValue3::True) return false;
    ++shown;
  }
  out << "checked knowledge-of-factivity instances: " << shown << "\n";
  return shown == o.samples;
}

}  // namespace

DemoReport demo_dichotomy(const DemoOptions& options, vm::Registry& reg) {
  std::ostringstream out;
  Natural e_star;
  bool a = self_knowing_section(options, reg, out, e_star);
  bool b = refutation_section(e_star, out);
  bool c = slash_section(options, out);
  DemoReport r;
  r.verified = a && b && c;
  out << (r.verified ? "DICHOTOMY: both horns verified" : "DICHOTOMY: not verified") << "\n";
  r.text = out.str();
  return r;
}

}  // namespace dichotomy
