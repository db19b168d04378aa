#include <random>

#include "doctest.h"
#include "dichotomy/calculus/enumerator.hpp"
#include "dichotomy/calculus/hilbertize.hpp"
#include "dichotomy/calculus/lemmas.hpp"
#include "dichotomy/calculus/proof_io.hpp"
#include "dichotomy/calculus/recognizer.hpp"
#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/parser.hpp"
#include "dichotomy/syntax/printer.hpp"
#include "random_syntax.hpp"

using namespace dichotomy;

namespace {

Formula P(const char* text) { return parse_formula(text); }
Formula imp(const Formula& a, const Formula& b) { return Formula::implies(a, b); }
Formula neg(const Formula& a) { return Formula::negation(a); }
Formula K(const Formula& a) { return Formula::known(a); }

const Formula zz = P("0=0");

// The textbook derivation of A -> A.
Proof identity_by_hand(const Formula& a) {
  Formula aa = imp(a, a);
  Formula s1 = imp(a, imp(aa, a));
  Formula s2 = imp(s1, imp(imp(a, aa), aa));
  Formula s3 = imp(imp(a, aa), aa);
  Formula s4 = imp(a, aa);
  return {{},
          {{s1, LogicAxiom{Schema::PropAx1}},
           {s2, LogicAxiom{Schema::PropAx2}},
           {s3, ModusPonens{0, 1}},
           {s4, LogicAxiom{Schema::PropAx1}},
           {aa, ModusPonens{3, 2}}}};
}

// 0 = 0 from reflexivity.
Proof zero_refl() {
  Formula refl = P("forall x0. x0 = x0");
  return {{},
          {{refl, LogicAxiom{Schema::EqRefl}},
           {imp(refl, zz), LogicAxiom{Schema::QInst}},
           {zz, ModusPonens{0, 1}}}};
}

}  // namespace

TEST_SUITE("theories") {
  TEST_CASE("presets") {
    auto sm = TheorySpec::sigma_machine();
    CHECK(sm.schemas() == std::vector<Schema>{Schema::KT, Schema::KMP, Schema::KArith, Schema::Closure,
                                              Schema::Factivity});
    auto sp = TheorySpec::sigma_prime_e(5);
    CHECK_FALSE(sp.contains(Schema::Factivity));
    CHECK_FALSE(sp.contains(Schema::KFactivity));
    CHECK(sp.contains(SchemaId{Schema::GNum, 5}));
    CHECK_FALSE(sp.contains(SchemaId{Schema::GNum, 6}));
    auto se = TheorySpec::sigma_e(3);
    CHECK(se.contains(Schema::KFactivity));
    CHECK(se.contains(Schema::Factivity));
    CHECK(se.contains(SchemaId{Schema::KGNum, 3}));
    CHECK_FALSE(se.contains(Schema::GNum));
  }

  TEST_CASE("codes and text round trip") {
    for (auto t : {TheorySpec(), TheorySpec::sigma_slash(), TheorySpec::sigma_e(7),
                   TheorySpec::sigma_prime_e(Natural("123456789012345678901")), TheorySpec::pa()}) {
      CHECK(TheorySpec::from_code(t.code()) == t);
      CHECK(TheorySpec::parse(t.to_string().substr(0, t.to_string().find(' ')), t.e()) == t);
    }
    CHECK(TheorySpec::parse("sigma_e,-KFactivity", 0) == TheorySpec::sigma_e(0).without(Schema::KFactivity));
    CHECK(TheorySpec::parse("PAAxiom, Induction", 0) == TheorySpec::pa());
    CHECK_THROWS(TheorySpec::parse("sigma_x", 0));
    CHECK_THROWS(TheorySpec::parse("QInst", 0));
    CHECK_THROWS(TheorySpec::from_code(cantor_pair(Natural(1 << 11), Natural(0))));
  }
}

TEST_SUITE("recognizer") {
  TEST_CASE("examples") {
    Proof witness = identity_by_hand(zz);
    auto kt = is_axiom_instance(TheorySpec::sigma_machine(), K(imp(zz, zz)), &witness);
    REQUIRE(kt);
    CHECK(kt->kind == Schema::KT);
    CHECK_FALSE(is_axiom_instance(TheorySpec::sigma_machine(), K(imp(zz, zz))));
    auto fac = is_axiom_instance(TheorySpec::sigma_machine(), imp(K(zz), zz));
    REQUIRE(fac);
    CHECK(fac->kind == Schema::Factivity);
    CHECK_FALSE(is_axiom_instance(TheorySpec::sigma_machine(), zz));
    auto comp = is_axiom_instance(TheorySpec::pa_comp(), zz);
    REQUIRE(comp);
    CHECK(comp->kind == Schema::Comp);
  }

  TEST_CASE("propositional schemas") {
    Formula a = P("x0 = 0"), b = P("K(x1 = 0)"), c = P("In(0, 0)");
    CHECK(is_logic_instance(Schema::PropAx1, imp(a, imp(b, a))));
    CHECK_FALSE(is_logic_instance(Schema::PropAx1, imp(a, imp(b, b))));
    CHECK(is_logic_instance(Schema::PropAx2, imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)))));
    CHECK_FALSE(is_logic_instance(Schema::PropAx2, imp(imp(a, imp(b, c)), imp(imp(a, c), imp(a, c)))));
    CHECK(is_logic_instance(Schema::PropAx3, imp(imp(neg(b), neg(a)), imp(imp(neg(b), a), b))));
    CHECK_FALSE(is_logic_instance(Schema::PropAx3, imp(imp(neg(b), neg(a)), imp(imp(neg(b), a), a))));
  }

  TEST_CASE("quantifier instantiation") {
    CHECK(is_logic_instance(Schema::QInst, P("(forall x0. x0 = x1) -> S(0) = x1")));
    CHECK(is_logic_instance(Schema::QInst, P("(forall x0. x1 = 0) -> x1 = 0")));
    CHECK(is_logic_instance(Schema::QInst, P("(forall x0. forall x1. x0 = x1) -> forall x2. x1 = x2")));
    CHECK_FALSE(is_logic_instance(Schema::QInst, P("(forall x0. forall x1. x0 = x1) -> forall x1. x1 = x1")));
    CHECK_FALSE(is_logic_instance(Schema::QInst, P("(forall x0. x0 = x0) -> 0 = S(0)")));
    // K-atoms are opaque, so nothing inside them is instantiated.
    CHECK(is_logic_instance(Schema::QInst, P("(forall x0. K(x0 = 0)) -> K(x0 = 0)")));
    CHECK_FALSE(is_logic_instance(Schema::QInst, P("(forall x0. K(x0 = 0)) -> K(0 = 0)")));
  }

  TEST_CASE("quantifier distribution") {
    CHECK(is_logic_instance(Schema::QDistr, P("(forall x0. 0 = 0 -> x0 = 0) -> 0 = 0 -> forall x0. x0 = 0")));
    CHECK_FALSE(is_logic_instance(Schema::QDistr, P("(forall x0. x0 = 0 -> x0 = 0) -> x0 = 0 -> forall x0. x0 = 0")));
  }

  TEST_CASE("equality") {
    CHECK(is_logic_instance(Schema::EqRefl, P("forall x3. x3 = x3")));
    CHECK_FALSE(is_logic_instance(Schema::EqRefl, P("forall x3. x2 = x2")));
    CHECK(is_logic_instance(Schema::EqSubst, P("x0 = S(0) -> x0 + x0 = 0 -> x0 + S(0) = 0")));
    CHECK(is_logic_instance(Schema::EqSubst, P("x0 = 0 -> In(x1, x2) -> In(x1, x2)")));
    CHECK_FALSE(is_logic_instance(Schema::EqSubst, P("x0 = 0 -> x0 = x1 -> x1 = 0")));
    // A hole may not sit under a binder of one of the terms' variables.
    CHECK_FALSE(is_logic_instance(Schema::EqSubst, P("x0 = 0 -> (forall x0. x0 = x1) -> forall x0. 0 = x1")));
    CHECK(is_logic_instance(Schema::EqSubst, P("x0 = 0 -> (forall x1. x0 = x1) -> forall x1. 0 = x1")));
    // Nor inside a K-atom.
    CHECK_FALSE(is_logic_instance(Schema::EqSubst, P("x0 = 0 -> K(x0 = x0) -> K(0 = x0)")));
  }

  TEST_CASE("arithmetic schemas") {
    for (const Formula& ax : pa_axioms()) {
      CHECK(ax.is_closed());
      CHECK(is_theory_instance({Schema::PAAxiom}, ax));
    }
    CHECK(to_string(pa_axioms()[5]) == "forall x0. forall x1. x0 * S(x1) = x0 * x1 + x0");
    Formula ind = P("0 + 0 = 0 -> (forall x0. x0 + 0 = x0 -> S(x0) + 0 = S(x0)) -> forall x0. x0 + 0 = x0");
    CHECK(is_theory_instance({Schema::Induction}, ind));
    CHECK(induction_instance(P("x0 + 0 = x0"), 0) == ind);
    CHECK(is_theory_instance({Schema::Induction}, induction_instance(P("K(x0 = 0) -> x0 = x1"), 0)));
    CHECK_FALSE(is_theory_instance({Schema::Induction}, P("0 = 0 -> (forall x0. 0 = 0 -> 0 = 0) -> forall x1. 0 = 0")));
    CHECK(is_theory_instance({Schema::Comp}, P("S(S(0)) * num 3 = num 2 + num 4")));
    CHECK_FALSE(is_theory_instance({Schema::Comp}, P("S(0) = 0")));
    CHECK_FALSE(is_theory_instance({Schema::Comp}, P("x0 = x0")));
    Natural theta = encode(P("x0 = 0"));
    Natural phi = encode(Formula::eq(Term::num(theta), Term::zero()));
    CHECK(is_theory_instance({Schema::Comp}, Formula::eq(Term::diag(Term::num(theta)), Term::num(phi))));
  }

  TEST_CASE("knowledge schemas") {
    Formula a = P("In(x0, num 4)"), b = P("0 = 0");
    CHECK(is_theory_instance({Schema::KMP}, imp(K(imp(a, b)), imp(K(a), K(b)))));
    CHECK_FALSE(is_theory_instance({Schema::KMP}, imp(K(imp(a, b)), imp(K(b), K(a)))));
    CHECK(is_theory_instance({Schema::KArith}, K(pa_axioms()[2])));
    CHECK(is_theory_instance({Schema::KArith}, K(P("S(0) = num 1"))));
    CHECK_FALSE(is_theory_instance({Schema::KArith}, K(P("S(0) = num 2"))));
    CHECK(is_theory_instance({Schema::KFactivity}, K(imp(K(a), a))));
    Formula g = gnum_instance(a, 9);
    CHECK(to_string(g) == "K(In(x0, num 4)) <-> In(num " + encode(a).get_str() + ", num 9)");
    CHECK(is_theory_instance({Schema::GNum, 9}, g));
    CHECK_FALSE(is_theory_instance({Schema::GNum, 8}, g));
    CHECK(is_theory_instance({Schema::KGNum, 9}, K(g)));
    CHECK_FALSE(is_theory_instance({Schema::GNum, 9}, gnum_instance(a, 9).sub().sub(0)));
  }

  TEST_CASE("closure applies exactly to KT, KMP and KArith instances") {
    testing::RandomSyntax gen(21);
    Proof witness = identity_by_hand(zz);
    int matched = 0, total = 0;
    for (int k = 0; k < 300; ++k) {
      Formula a = gen.formula(2), b = gen.formula(2);
      std::vector<std::pair<Formula, bool>> cases = {
          {imp(K(imp(a, b)), imp(K(a), K(b))), true},            // KMP
          {K(induction_instance(a, gen.pick(3))), true},        // KArith
          {K(pa_axioms()[k % 6]), true},                        // KArith
          {imp(K(a), a), false},                                // Factivity
          {K(imp(K(a), a)), false},                             // KFactivity
          {gnum_instance(a, 3), false},                         // GNum
          {K(gnum_instance(a, 3)), false},                      // KGNum
          {a, false},
      };
      for (auto& [body, expected] : cases) {
        auto got = is_axiom_instance(TheorySpec::sigma_machine(), K(body));
        bool closure = got && got->kind == Schema::Closure;
        CHECK_MESSAGE(closure == expected, to_string(body));
        matched += closure;
        ++total;
      }
    }
    // K(K(0=0 -> 0=0)) is Closure only given a witness.
    Formula kk = K(K(imp(zz, zz)));
    CHECK_FALSE(is_axiom_instance(TheorySpec::sigma_machine(), kk));
    auto with = is_axiom_instance(TheorySpec::sigma_machine(), kk, &witness);
    REQUIRE(with);
    CHECK(with->kind == Schema::Closure);
    CHECK(matched * 8 == total * 3);
  }
}

TEST_SUITE("checker") {
  TEST_CASE("identity derivation") {
    Proof p = identity_by_hand(zz);
    CHECK(check_proof(TheorySpec(), p));
    CHECK(p.conclusion() == imp(zz, zz));
  }

  TEST_CASE("mutations are rejected at the mutated step") {
    Proof p = identity_by_hand(P("In(0, x1)"));
    Proof m1 = p;
    m1.steps[4].justification = ModusPonens{2, 3};
    auto r1 = check_proof(TheorySpec(), m1);
    CHECK_FALSE(r1);
    CHECK(r1.step == 5);
    Proof m2 = p;
    m2.steps[1].justification = LogicAxiom{Schema::PropAx1};
    auto r2 = check_proof(TheorySpec(), m2);
    CHECK(r2.step == 2);
    Proof m3 = p;
    m3.steps[3].formula = neg(m3.steps[3].formula);
    CHECK(check_proof(TheorySpec(), m3).step == 4);
    Proof m4 = p;
    m4.steps[2].justification = ModusPonens{0, 3};
    CHECK(check_proof(TheorySpec(), m4).step == 3);
  }

  TEST_CASE("theory axioms need the theory") {
    Proof p{{}, {{imp(K(zz), zz), TheoryAxiom{{Schema::Factivity}, {}}}}};
    CHECK(check_proof(TheorySpec::sigma_machine(), p));
    auto r = check_proof(TheorySpec::sigma_prime_e(0), p);
    CHECK_FALSE(r);
    CHECK(r.step == 1);
    Proof g{{}, {{gnum_instance(zz, 4), TheoryAxiom{{Schema::GNum, 4}, {}}}}};
    CHECK(check_proof(TheorySpec::sigma_prime_e(4), g));
    CHECK_FALSE(check_proof(TheorySpec::sigma_prime_e(5), g));
  }

  TEST_CASE("generalization respects theory axioms") {
    Formula a = P("x0 = 0");
    Formula fac = imp(K(a), a);
    Proof p{{}, {{fac, TheoryAxiom{{Schema::Factivity}, {}}}, {Formula::forall(0, fac), Generalization{0, 0}}}};
    auto r = check_proof(TheorySpec::sigma_machine(), p);
    CHECK_FALSE(r);
    CHECK(r.step == 2);
    // Logical axioms do not restrict generalization.
    Formula refl_inst = P("(forall x0. x0 = x0) -> x1 = x1");
    Proof q{{}, {{refl_inst, LogicAxiom{Schema::QInst}}, {Formula::forall(1, refl_inst), Generalization{0, 1}}}};
    CHECK(check_proof(TheorySpec(), q));
  }

  TEST_CASE("lemmas witness KT") {
    Proof p{{{"refl", zero_refl().steps}}, {{K(zz), TheoryAxiom{{Schema::KT}, "refl"}}}};
    CHECK(check_proof(TheorySpec::sigma_machine(), p));
    Proof wrong = p;
    wrong.steps[0].formula = K(P("0 = S(0)"));
    CHECK(check_proof(TheorySpec::sigma_machine(), wrong).step == 1);
    Proof bad = p;
    bad.lemmas[0].steps[2].justification = ModusPonens{1, 0};
    auto r = check_proof(TheorySpec::sigma_machine(), bad);
    CHECK_FALSE(r);
    CHECK(r.step == 1);
    CHECK(r.reason.find("lemma refl") != std::string::npos);
    // Lemmas are pure logic: theory axioms inside them fail.
    Proof impure{{{"f", {{imp(K(zz), zz), TheoryAxiom{{Schema::Factivity}, {}}}}}},
                 {{K(imp(K(zz), zz)), TheoryAxiom{{Schema::KT}, "f"}}}};
    CHECK_FALSE(check_proof(TheorySpec::sigma_machine(), impure));
  }
}

TEST_SUITE("proof files") {
  TEST_CASE("write then read") {
    Proof p{{{"refl", zero_refl().steps}},
            {{K(zz), TheoryAxiom{{Schema::KT}, "refl"}},
             {imp(K(zz), zz), TheoryAxiom{{Schema::Factivity}, {}}},
             {zz, ModusPonens{0, 1}},
             {K(gnum_instance(zz, 12)), TheoryAxiom{{Schema::KGNum, 12}, {}}},
             {K(K(zz)), TheoryAxiom{{Schema::Closure}, "refl"}},
             {P("S(0) = num 1"), TheoryAxiom{{Schema::Comp}, {}}}}};
    TheorySpec t = TheorySpec::sigma_e(12);
    REQUIRE(check_proof(t, p));
    std::string text = write_proof(p, t);
    CHECK(text.find("theory: sigma_e e=12\n") == 0);
    CHECK(text.find("3. 0 = 0 ; mp:1,2\n") != std::string::npos);
    CHECK(text.find("; kt:refl") != std::string::npos);
    CHECK(text.find("; ax:KGNum:12") != std::string::npos);
    CHECK(text.find("; ax:Closure:refl") != std::string::npos);
    ProofFile back = read_proof(text);
    REQUIRE(back.theory);
    CHECK(*back.theory == t);
    CHECK(write_proof(back.proof, *back.theory) == text);
    CHECK(check_proof(*back.theory, back.proof));
  }

  TEST_CASE("format errors carry the line") {
    try {
      read_proof("theory: none\n1. 0 = 0 ; comp\n3. 0 = 0 ; comp\n");
      FAIL("accepted");
    } catch (const ProofFormatError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(read_proof("1. 0 = ; comp\n"), ProofFormatError);
    CHECK_THROWS_AS(read_proof("1. 0 = 0 ; mp:1\n"), ProofFormatError);
    CHECK_THROWS_AS(read_proof("1. 0 = 0 ; ax:Nope\n"), ProofFormatError);
    CHECK_THROWS_AS(read_proof("lemma a:\n1. 0 = 0 ; comp\n"), ProofFormatError);
    CHECK_THROWS_AS(read_proof(""), ProofFormatError);
    CHECK_THROWS_AS(read_proof("1. 0 = 0 ; ax:GNum:x\n"), ProofFormatError);
    ProofFile f = read_proof("# comment\n1. forall x0. x0 = x0 ; eq-refl\n");
    CHECK_FALSE(f.theory);
    CHECK(check_proof(TheorySpec(), f.proof));
  }
}

TEST_SUITE("scripts") {
  TEST_CASE("assume then discharge") {
    Formula a = P("In(x0, 0)");
    Script s;
    Proof p = s.finish(s.assume(a));
    CHECK(p.conclusion() == imp(a, a));
    CHECK(check_proof(TheorySpec(), p));
  }

  TEST_CASE("lines from closed scopes are unusable") {
    Script s;
    auto h = s.assume(zz);
    s.discharge(h);
    CHECK_THROWS_AS(s.mp(h, h), ScriptError);
  }

  TEST_CASE("generalization over a hypothesis variable is refused") {
    Script s;
    auto h = s.assume(P("x0 = 0"));
    CHECK_THROWS_AS(s.gen(h, 0), ScriptError);
  }

  TEST_CASE("theory steps under hypotheses") {
    Formula a = P("x1 = 0");
    Script s;
    auto h = s.assume(K(a));
    auto f = s.theory({Schema::Factivity}, imp(K(a), a));
    Proof p = s.finish(s.mp(h, f));
    CHECK(p.conclusion() == imp(K(a), a));
    CHECK(check_proof(TheorySpec::sigma_machine(), p));
    CHECK_FALSE(check_proof(TheorySpec(), p));
  }

  TEST_CASE("lemma library") {
    testing::RandomSyntax gen(5);
    for (int k = 0; k < 20; ++k) {
      Formula a = gen.formula(2), b = gen.formula(2);
      std::vector<std::pair<Proof, Formula>> cases = {
          {lemmas::identity(a), imp(a, a)},
          {lemmas::double_negation(a), imp(neg(neg(a)), a)},
          {lemmas::double_negation_intro(a), imp(a, neg(neg(a)))},
          {lemmas::explosion(a, b), imp(neg(a), imp(a, b))},
          {lemmas::contra_reverse(a, b), imp(imp(neg(b), neg(a)), imp(a, b))},
          {lemmas::contrapose(a, b), imp(imp(a, b), imp(neg(b), neg(a)))},
          {lemmas::negated_implication(a, b), imp(a, imp(neg(b), neg(imp(a, b))))},
          {lemmas::cases(a, b), imp(imp(a, b), imp(imp(neg(a), b), b))},
          {lemmas::consequentia_mirabilis(a), imp(imp(neg(a), a), a)},
          {lemmas::and_left(a, b), imp(Formula::conj(a, b), a)},
          {lemmas::and_right(a, b), imp(Formula::conj(a, b), b)},
          {lemmas::and_intro(a, b), imp(a, imp(b, Formula::conj(a, b)))},
          {lemmas::iff_forward(a, b), imp(Formula::iff(a, b), imp(a, b))},
          {lemmas::iff_backward(a, b), imp(Formula::iff(a, b), imp(b, a))},
      };
      for (auto& [proof, expected] : cases) {
        CHECK(proof.conclusion() == expected);
        auto r = check_proof(TheorySpec(), proof);
        CHECK_MESSAGE(r, to_string(expected) << " step " << r.step << ": " << r.reason);
      }
    }
  }

  TEST_CASE("random scripts compile to accepted proofs") {
    testing::RandomSyntax gen(77);
    std::mt19937_64 rng(77);
    auto roll = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    for (int trial = 0; trial < 100; ++trial) {
      Script s;
      struct Live {
        Script::Line line;
        std::size_t depth;
      };
      std::vector<Live> pool;
      std::vector<Formula> hyps;
      auto add = [&](Script::Line l) { pool.push_back({l, s.depth()}); };
      add(s.use(lemmas::identity(gen.formula(1))));
      for (int op = 0; op < 25; ++op) {
        switch (roll(6)) {
          case 0:
            if (s.depth() < 4) {
              hyps.push_back(gen.formula(1));
              add(s.assume(hyps.back()));
            }
            break;
          case 1: {  // X -> (Y -> X), then detach
            Live x = pool[roll(pool.size())];
            Formula xf = s.formula(x.line);
            auto ax = s.logic(Schema::PropAx1, imp(xf, imp(gen.formula(1), xf)));
            add(ax);
            add(s.mp(x.line, ax));
            break;
          }
          case 2: {  // detach any matching pair
            for (int tries = 0; tries < 20; ++tries) {
              const Live& i = pool[roll(pool.size())];
              const Live& j = pool[roll(pool.size())];
              const Formula& fj = s.formula(j.line);
              if (fj.kind() == Formula::Kind::Imp && fj.sub(0) == s.formula(i.line)) {
                add(s.mp(i.line, j.line));
                break;
              }
            }
            break;
          }
          case 3:
            add(s.gen(pool[roll(pool.size())].line, 9));
            break;
          case 4:
            if (s.depth() > 0) {
              Script::Line l = pool[roll(pool.size())].line;
              hyps.pop_back();
              Script::Line d = s.discharge(l);
              std::erase_if(pool, [&](const Live& v) { return v.depth > s.depth(); });
              add(d);
            }
            break;
          default:
            add(s.use(lemmas::double_negation_intro(s.formula(pool[roll(pool.size())].line))));
            break;
        }
      }
      Script::Line last = pool[roll(pool.size())].line;
      Formula expected = s.formula(last);
      for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) expected = imp(*it, expected);
      Proof p = s.finish(last);
      CHECK(p.conclusion() == expected);
      auto r = check_proof(TheorySpec(), p);
      CHECK_MESSAGE(r, "trial " << trial << " step " << r.step << ": " << r.reason);
    }
  }
}

TEST_SUITE("enumerator") {
  TEST_CASE("pure logic derives 0 = 0") {
    ConsequenceEnumerator en{TheorySpec()};
    std::optional<std::size_t> at;
    while (!(at = en.position(zz)) && en.steps_taken() < 200000) en.step();
    REQUIRE(at);
    MESSAGE("0 = 0 at stream index " << *at << " after " << en.steps_taken() << " steps");
    CHECK(check_proof(TheorySpec(), en.proof_of(*at)));
    CHECK_FALSE(en.position(P("0 = S(0)")));
  }

  TEST_CASE("streams extend their prefixes") {
    for (auto t : {TheorySpec(), TheorySpec::sigma_slash(), TheorySpec::sigma_e(3)}) {
      auto small = enumerate_consequences(t, 3000);
      auto large = enumerate_consequences(t, 12000);
      REQUIRE(small.size() <= large.size());
      CHECK(std::equal(small.begin(), small.end(), large.begin()));
      CHECK(enumerate_consequences(t, 3000) == small);
    }
  }

  TEST_CASE("no duplicates") {
    ConsequenceEnumerator en{TheorySpec::sigma_slash()};
    en.run_to(20000);
    std::unordered_map<Formula, int, FormulaHash> seen;
    for (std::size_t i = 0; i < en.size(); ++i) CHECK(seen[en.at(i)]++ == 0);
    for (std::size_t i = 0; i < en.size(); ++i) CHECK(en.position(en.at(i)) == i);
  }

  TEST_CASE("theory schemas reach the stream") {
    ConsequenceEnumerator en{TheorySpec::sigma_slash()};
    en.run_to(20000);
    int factivity = 0, kfact = 0, kt = 0;
    for (std::size_t i = 0; i < en.size(); ++i) {
      const Formula& f = en.at(i);
      if (is_theory_instance({Schema::Factivity}, f)) ++factivity;
      if (is_theory_instance({Schema::KFactivity}, f)) ++kfact;
      if (f.kind() == Formula::Kind::KAtom && en.position(f.sub()) ) ++kt;
    }
    CHECK(factivity >= 10);
    CHECK(kfact == 0);
    CHECK(kt >= 1);
  }

  TEST_CASE("every emitted element has an accepted proof") {
    for (auto t : {TheorySpec(), TheorySpec::sigma_slash(), TheorySpec::sigma_e(11),
                   TheorySpec::sigma_prime_e(11)}) {
      ConsequenceEnumerator en{t};
      en.run_to(6000);
      REQUIRE(en.size() > 100);
      for (std::size_t i = 0; i < en.size(); i += 1 + i / 50) {
        Proof p = en.proof_of(i);
        CHECK(p.conclusion() == en.at(i));
        auto r = check_proof(t, p);
        CHECK_MESSAGE(r, t.to_string() << " element " << i << " step " << r.step << ": " << r.reason);
      }
    }
  }

  TEST_CASE("codes match the encoder") {
    ConsequenceEnumerator en{TheorySpec::pa_comp()};
    en.run_to(2000);
    for (std::size_t i = 0; i < en.size(); ++i) CHECK(en.code_at(i) == encode(en.at(i)));
  }
}
