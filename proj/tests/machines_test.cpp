#include <unordered_set>

#include "doctest.h"
#include "dichotomy/calculus/enumerator.hpp"
#include "dichotomy/calculus/recognizer.hpp"
#include "dichotomy/enumvm/fixed_point.hpp"
#include "dichotomy/machines/machine.hpp"
#include "dichotomy/machines/slash.hpp"
#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/ground_eval.hpp"
#include "dichotomy/syntax/parser.hpp"
#include "dichotomy/syntax/printer.hpp"
#include "dichotomy/syntax/substitution.hpp"
#include "random_syntax.hpp"

using namespace dichotomy;
using T3 = TruthValue3;

namespace {

Formula P(const char* s) { return parse_formula(s); }
Formula K(const Formula& f) { return Formula::known(f); }
Formula imp(const Formula& a, const Formula& b) { return Formula::implies(a, b); }

// Two-valued truth of quantifier-free arithmetic sentences.
bool truth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq: return eval_ground_term(f.term(0)) == eval_ground_term(f.term(1));
    case Formula::Kind::Not: return !truth(f.sub());
    case Formula::Kind::Imp: return !truth(f.sub(0)) || truth(f.sub(1));
    default: FAIL("outside the fragment"); return false;
  }
}

// forall x. (exists y. y + x = t) -> body
Formula bounded_forall(VarIndex x, VarIndex y, const Term& t, const Formula& body) {
  Formula guard = Formula::exists(y, Formula::eq(Term::plus(Term::var(y), Term::var(x)), t));
  return Formula::forall(x, imp(guard, body));
}

Formula open_arith(testing::RandomSyntax& gen, int depth) {
  switch (depth <= 0 ? 0 : gen.pick(3)) {
    case 0: return Formula::eq(gen.term(1), gen.term(1));
    case 1: return Formula::negation(open_arith(gen, depth - 1));
    default: return imp(open_arith(gen, depth - 1), open_arith(gen, depth - 1));
  }
}

// Evaluation limits for sampling many formulas.
EvalOptions modest(std::uint64_t vm_budget) {
  EvalOptions o;
  o.vm_budget = vm_budget;
  o.search_limit = 64;
  o.bounded_limit = 256;
  o.fuel = 20000;
  return o;
}

bool flips(T3 a, T3 b) { return a != T3::Unknown && b != T3::Unknown && a != b; }

}  // namespace

TEST_SUITE("standard model") {
  TEST_CASE("examples") {
    CHECK(std_eval(P("0 = 0"), 10, unknown_oracle) == T3::True);
    Formula b = bounded_forall(0, 1, Term::num(2), P("x0 + 0 = x0"));
    CHECK(std_eval(b, 10, unknown_oracle) == T3::True);
    for (std::uint64_t budget : {1, 10, 1000})
      CHECK(std_eval(P("exists x0. S(x0) = 0"), budget, unknown_oracle) == T3::Unknown);
    CHECK(std_eval(P("exists x0. x0 * x0 = num 49"), 10, unknown_oracle) == T3::True);
    CHECK(std_eval(P("exists x0. x0 * x0 = num 49"), 5, unknown_oracle) == T3::Unknown);
    CHECK(std_eval(P("forall x0. x0 * x0 = x0"), 10, unknown_oracle) == T3::False);
    CHECK(std_eval(P("forall x3. 0 = 0"), 1, unknown_oracle) == T3::True);
    CHECK_THROWS_AS(std_eval(P("x0 = 0"), 10, unknown_oracle), OpenFormulaError);
  }

  TEST_CASE("quantifier-free arithmetic is decided correctly") {
    testing::RandomSyntax gen(91);
    for (int i = 0; i < 1000; ++i) {
      Formula f = gen.arithmetic_sentence(4);
      CHECK(std_eval(f, 1, unknown_oracle) == (truth(f) ? T3::True : T3::False));
    }
  }

  TEST_CASE("bounded quantifiers expand") {
    testing::RandomSyntax gen(92);
    gen.max_var = 0;
    for (int i = 0; i < 300; ++i) {
      Formula body = open_arith(gen, 2);
      unsigned long bound = gen.pick(7);
      bool expected = true;
      for (unsigned long n = 0; n <= bound; ++n) expected = expected && truth(substitute(body, 0, Term::num(n)));
      Formula f = bounded_forall(0, 1, Term::num(bound), body);
      CHECK_MESSAGE(std_eval(f, 8, unknown_oracle) == (expected ? T3::True : T3::False), to_string(f));
      Formula g = Formula::negation(bounded_forall(0, 1, Term::num(bound), Formula::negation(body)));
      bool some = false;
      for (unsigned long n = 0; n <= bound; ++n) some = some || truth(substitute(body, 0, Term::num(n)));
      CHECK(std_eval(g, 8, unknown_oracle) == (some ? T3::True : T3::False));
    }
  }

  TEST_CASE("membership") {
    vm::Registry reg;
    Natural e = reg.alloc(vm::Prog::emit({vm::Expr::lit(1), vm::Expr::lit(2), vm::Expr::lit(3)}));
    Natural loop = reg.alloc(vm::Prog::run_index(vm::Expr::self()));
    EvalOptions o = EvalOptions::from_budget(10);
    o.registry = &reg;
    auto in = [](unsigned long a, const Natural& b) { return Formula::in(Term::num(a), Term::num(b)); };
    CHECK(std_eval(in(2, e), unknown_oracle, o) == T3::True);
    CHECK(std_eval(in(4, e), unknown_oracle, o) == T3::False);
    CHECK(std_eval(in(4, loop), unknown_oracle, o) == T3::Unknown);
    CHECK(std_eval(in(4, 1000), unknown_oracle, o) == T3::Unknown);
    o.vm_budget = 1;
    CHECK(std_eval(in(2, e), unknown_oracle, o) == T3::Unknown);
  }

  TEST_CASE("K-atoms come from the oracle") {
    KOracle o = [](const Formula& psi) { return psi == P("0 = 0") ? T3::True : T3::Unknown; };
    CHECK(std_eval(P("K(0 = 0)"), 5, o) == T3::True);
    CHECK(std_eval(P("~K(0 = 0)"), 5, o) == T3::False);
    CHECK(std_eval(P("K(0 = S(0))"), 5, o) == T3::Unknown);
    CHECK(std_eval(P("K(0 = S(0)) -> 0 = 0"), 5, o) == T3::True);
    CHECK(std_eval(P("forall x0. K(x0 = 0)"), 5, o) == T3::Unknown);
  }

  TEST_CASE("raising the budget never flips a decided value") {
    testing::RandomSyntax gen(93);
    KOracle o = [](const Formula& psi) { return psi.is_closed() && psi.all_vars().empty() ? T3::True : T3::Unknown; };
    for (int i = 0; i < 200; ++i) {
      Formula f = universal_closure(gen.formula(3));
      T3 prev = T3::Unknown;
      for (std::uint64_t b : {2, 8, 32, 128}) {
        T3 v = std_eval(f, b, o);
        CHECK_FALSE(flips(prev, v));
        if (prev != T3::Unknown) CHECK(v == prev);
        prev = v;
      }
    }
  }
}

TEST_SUITE("slash") {
  TEST_CASE("knowledge of 0 = 0 appears with its proof") {
    ConsequenceEnumerator en{TheorySpec::sigma_slash()};
    std::optional<std::size_t> at;
    while (!(at = en.position(P("0 = 0")))) en.step();
    CHECK(slash_eval(TheorySpec::sigma_slash(), K(P("0 = 0")), *at + 1) == T3::True);
    CHECK(slash_eval(TheorySpec::sigma_slash(), K(P("0 = 0")), *at) == T3::Unknown);
    Formula kf = K(imp(K(P("0 = 0")), P("0 = 0")));
    std::optional<std::size_t> at2;
    while (!(at2 = en.position(kf.sub()))) en.step();
    CHECK(slash_eval(TheorySpec::sigma_slash(), kf, *at2 + 1) == T3::True);
  }

  TEST_CASE("knowledge of a falsehood is never affirmed") {
    for (std::uint64_t b : {10, 100, 1000, 5000}) {
      T3 v = slash_eval(TheorySpec::sigma_slash(), K(P("~(0 = 0)")), b);
      CHECK(v != T3::True);
      CHECK(v == T3::False);
    }
  }

  TEST_CASE("factivity, knowledge of factivity and closure under modus ponens") {
    SlashModel m(TheorySpec::sigma_slash(), 3000, modest(3000));
    ConsequenceEnumerator en{TheorySpec::sigma_slash()};
    en.fill(3000, 100000);
    int kk = 0;
    for (std::size_t i = 0; i < en.size(); ++i) {
      const Formula& f = en.at(i);
      if (!f.is_closed() || !is_theory_instance({Schema::Factivity}, f)) continue;
      T3 inner = m.eval(universal_closure(f.sub(1)));
      if (inner == T3::Unknown) continue;
      CHECK(m.known(f) == T3::True);
      ++kk;
    }
    CHECK(kk >= 10);
    testing::RandomSyntax gen(94);
    for (int i = 0; i < 200; ++i) {
      Formula a = universal_closure(gen.formula(2));
      if (m.eval(K(a)) == T3::True) CHECK(m.eval(a) == T3::True);
    }
    // K(a -> b) and K(a) known at a budget give K(b) at a larger one.
    SlashModel later(TheorySpec::sigma_slash(), 20000, modest(20000));
    int mp_pairs = 0;
    for (std::size_t i = 0; i < en.size() && mp_pairs < 20; ++i) {
      const Formula& f = en.at(i);
      if (!f.is(Formula::Kind::Imp)) continue;
      if (m.known(f) != T3::True || m.known(f.sub(0)) != T3::True) continue;
      ++mp_pairs;
      CHECK(later.known(f.sub(1)) == T3::True);
    }
    CHECK(mp_pairs > 0);
  }

  TEST_CASE("true stream elements are known, and known formulas are provable") {
    SlashModel small(TheorySpec::sigma_slash(), 500, modest(500));
    ConsequenceEnumerator en{TheorySpec::sigma_slash()};
    en.fill(500, 100000);
    int checked = 0;
    for (std::size_t i = 0; i < en.size() && checked < 30; ++i) {
      const Formula& f = en.at(i);
      if (small.eval(universal_closure(f)) != T3::True) continue;
      CHECK(small.known(f) == T3::True);
      ++checked;
    }
    CHECK(checked == 30);
    testing::RandomSyntax gen(95);
    for (int i = 0; i < 300; ++i) {
      Formula f = gen.formula(2);
      if (small.known(f) == T3::True) CHECK(small.provable(f));
    }
  }

  TEST_CASE("slash values are monotone in the budget") {
    testing::RandomSyntax gen(96);
    std::vector<Formula> sample;
    for (int i = 0; i < 200; ++i) sample.push_back(universal_closure(gen.formula(3)));
    std::vector<T3> prev(sample.size(), T3::Unknown);
    for (std::uint64_t b : {16, 128, 1024}) {
      SlashModel m(TheorySpec::sigma_slash(), b);
      for (std::size_t i = 0; i < sample.size(); ++i) {
        T3 v = m.eval(sample[i]);
        CHECK_FALSE(flips(prev[i], v));
        if (prev[i] != T3::Unknown) CHECK(v == prev[i]);
        prev[i] = v;
      }
    }
  }

  TEST_CASE("the stream is sound in its own model") {
    SlashModel m(TheorySpec::sigma_slash(), 2000, modest(2000));
    ConsequenceEnumerator en{TheorySpec::sigma_slash()};
    en.fill(2000, 100000);
    for (std::size_t i = 0; i < en.size(); ++i) CHECK(m.eval(universal_closure(en.at(i))) != T3::False);
  }
}

TEST_SUITE("machines") {
  TEST_CASE("trivial machines") {
    CHECK(make_know_nothing().knowledge(1000).empty());
    std::vector<Formula> expected;
    for (Natural n = 0; expected.size() < 40; ++n)
      if (auto f = try_decode_formula(n)) expected.push_back(*f);
    CHECK(make_know_all().knowledge(40) == expected);
    auto pa = make_pa_machine().knowledge(3000);
    std::unordered_set<Formula, FormulaHash> s(pa.begin(), pa.end());
    CHECK(s.count(P("0 = 0")));
    CHECK_FALSE(s.count(P("~(0 = 0)")));
  }

  TEST_CASE("slash machine") {
    auto k = make_slash_machine().knowledge(3000);
    std::unordered_set<Formula, FormulaHash> s(k.begin(), k.end());
    int fact = 0;
    for (const Formula& f : k) fact += is_theory_instance({Schema::Factivity}, f);
    CHECK(fact >= 10);
    for (const Formula& ax : pa_axioms()) CHECK(s.count(ax));
    for (const Formula& f : k) CHECK_FALSE(s.count(Formula::negation(f)));
  }

  TEST_CASE("self-knowing machine") {
    SelfKnowing sk = make_self_knowing_machine();
    CHECK(sk.e_star == 6);
    CHECK(sk.machine.claimed_index() == sk.e_star);
    CHECK(make_self_knowing_machine().e_star == sk.e_star);
    auto k = sk.machine.knowledge(3000);
    std::unordered_set<Formula, FormulaHash> s(k.begin(), k.end());
    Formula zz = P("0 = 0");
    CHECK(s.count(gnum_instance(zz, sk.e_star)));
    CHECK(s.count(K(gnum_instance(zz, sk.e_star))));
    auto run = standard_registry().run(sk.e_star, 3000).elements;
    REQUIRE(run.size() >= 50);
    for (std::size_t i = 0; i < 50; ++i) CHECK(run[i] == encode(k[i]));
  }

  TEST_CASE("audits") {
    auto all = audit_factivity(make_know_all(), 100);
    CHECK_FALSE(all.empty());
    for (const Violation& v : all) CHECK(v.verdict == T3::False);
    CHECK(audit_factivity(make_know_nothing(), 100).empty());
    CHECK(audit_factivity(make_self_knowing_machine().machine, 300).empty());
    CHECK(audit_factivity(make_pa_machine(), 300).empty());
  }

  TEST_CASE("the know-all machine violates factivity at 0 = S(0)-style falsehoods") {
    std::size_t pos = 0;
    Natural target = encode(P("~(0 = 0)"));
    for (Natural n = 0; n < target; ++n)
      if (try_decode_formula(n)) ++pos;
    auto v = audit_factivity(make_know_all(), pos + 1);
    bool found = false;
    for (const Violation& x : v) found = found || x.formula == P("~(0 = 0)");
    CHECK(found);
  }
}
