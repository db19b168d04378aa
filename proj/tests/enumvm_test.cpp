#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "dichotomy/calculus/enumerator.hpp"
#include "dichotomy/calculus/recognizer.hpp"
#include "dichotomy/enumvm/fixed_point.hpp"
#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/parser.hpp"
#include "random_progs.hpp"

using namespace dichotomy;
using namespace dichotomy::vm;
using dichotomy::testing::L;
using dichotomy::testing::RandomProgs;

namespace {

std::set<Natural> as_set(const std::vector<Natural>& v) { return {v.begin(), v.end()}; }

std::set<Natural> at_most(const std::vector<Natural>& v, unsigned long bound) {
  std::set<Natural> out;
  for (const Natural& x : v)
    if (x <= bound) out.insert(x);
  return out;
}

Natural value(const Expr& e) {
  return e.kind == Expr::Kind::Pair ? cantor_pair(value(*e.a), value(*e.b)) : e.value;
}

// Set semantics of programs built from Emit, Interleave, MapPair and Section
// over literals.
std::set<Natural> reference(const Prog& p) {
  std::set<Natural> out;
  switch (p.kind) {
    case Prog::Kind::Emit:
      for (const Expr& e : p.exprs) out.insert(value(e));
      break;
    case Prog::Kind::Interleave:
      out = reference(p.kid(0));
      for (const Natural& x : reference(p.kid(1))) out.insert(x);
      break;
    case Prog::Kind::MapPair:
      for (const Natural& x : reference(p.kid(0))) out.insert(cantor_pair(p.exprs[0].value, x));
      break;
    case Prog::Kind::Section:
      for (const Natural& x : reference(p.kid(0))) {
        auto [n, m] = cantor_unpair(x);
        if (n == p.exprs[0].value) out.insert(m);
      }
      break;
    default: FAIL("unsupported");
  }
  return out;
}


}  // namespace

TEST_SUITE("programs") {
  TEST_CASE("s-expressions round trip") {
    RandomProgs gen(3);
    for (int i = 0; i < 200; ++i) {
      Prog p = gen.templ(4, 3);
      CHECK(parse_prog(to_sexpr(p)) == p);
    }
    Prog f = Prog::family(Prog::enum_consequences(Expr::pair(L(7), Expr::smn(Expr::param(), Expr::self()))));
    CHECK(to_sexpr(f) == "(Family (EnumConsequences (Pair 7 (Smn Param Self))))");
    CHECK(parse_prog(to_sexpr(f)) == f);
    CHECK(parse_prog(" ( Emit  ) ") == Prog::emit({}));
    CHECK_THROWS_AS(parse_prog("(Emit 1"), ProgParseError);
    CHECK_THROWS_AS(parse_prog("(Emit x)"), ProgParseError);
    CHECK_THROWS_AS(parse_prog("(Loop)"), ProgParseError);
    CHECK_THROWS_AS(parse_prog("(Emit) (Emit)"), ProgParseError);
  }

  TEST_CASE("instantiation respects Family binders") {
    Prog t = Prog::interleave(Prog::emit({Expr::param()}), Prog::family(Prog::emit({Expr::param()})));
    CHECK(has_free_param(t));
    Prog i = instantiate(t, L(9));
    CHECK_FALSE(has_free_param(i));
    CHECK(i == Prog::interleave(Prog::emit({L(9)}), Prog::family(Prog::emit({Expr::param()}))));
    Registry reg;
    CHECK_THROWS_AS(reg.alloc(t), std::invalid_argument);
  }
}

TEST_SUITE("runs") {
  TEST_CASE("emit") {
    Registry reg;
    Natural e = reg.alloc(Prog::emit({L(1), L(2), L(3)}));
    CHECK(e == 0);
    auto r = reg.run(e, 3);
    CHECK(r.elements == std::vector<Natural>{1, 2, 3});
    CHECK(r.exhausted);
    CHECK_FALSE(reg.run(e, 2).exhausted);
    CHECK(reg.run(e, 100).elements.size() == 3);
    CHECK(reg.member(e, 2, 3) == Membership::Member);
    CHECK(reg.member(e, 4, 3) == Membership::NonMember);
    CHECK(reg.member(e, 4, 2) == Membership::Unknown);
    CHECK(reg.member(2, 4, 100) == Membership::Unknown);
    CHECK_THROWS_AS(reg.run(2, 1), UnallocatedIndex);
  }

  TEST_CASE("interleave is fair") {
    Registry reg;
    std::vector<Expr> zeros(100, L(0));
    Natural e = reg.alloc(Prog::interleave(Prog::emit(zeros), Prog::emit({L(5)})));
    auto r = reg.run(e, 2);
    CHECK(std::find(r.elements.begin(), r.elements.end(), Natural(5)) != r.elements.end());
  }

  TEST_CASE("finite programs match set semantics") {
    RandomProgs gen(11);
    Registry reg;
    for (int i = 0; i < 300; ++i) {
      Prog p = gen.finite(4);
      Natural e = reg.alloc(p);
      auto r = reg.run(e, 100000);
      REQUIRE(r.exhausted);
      CHECK(as_set(r.elements) == reference(p));
    }
  }

  TEST_CASE("runs extend their prefixes") {
    RandomProgs gen(12);
    Registry reg;
    reg.alloc(Prog::emit({L(1)}));
    for (int i = 0; i < 100; ++i) {
      Natural e = reg.alloc(instantiate(gen.templ(4, static_cast<unsigned>(reg.size())), Expr::self()));
      std::vector<RunResult> rs;
      for (std::uint64_t b : {0, 1, 7, 50, 400, 3000}) rs.push_back(reg.run(e, b));
      for (std::size_t k = 1; k < rs.size(); ++k) {
        REQUIRE(rs[k - 1].elements.size() <= rs[k].elements.size());
        CHECK(std::equal(rs[k - 1].elements.begin(), rs[k - 1].elements.end(), rs[k].elements.begin()));
        if (rs[k - 1].exhausted) CHECK(rs[k].elements == rs[k - 1].elements);
      }
    }
  }

  TEST_CASE("later entries are invisible") {
    Registry reg;
    Natural a = reg.alloc(Prog::run_index(L(2)));
    Natural b = reg.alloc(Prog::emit({L(8)}));
    CHECK(b == 2);
    auto r = reg.run(a, 50);
    CHECK(r.elements.empty());
    CHECK(r.exhausted);
    Natural c = reg.alloc(Prog::run_index(L(2)));
    CHECK(reg.run(c, 50).elements == std::vector<Natural>{8});
  }

  TEST_CASE("consequence programs follow the enumerator") {
    Registry reg;
    for (TheorySpec t : {TheorySpec::sigma_prime_e(0), TheorySpec::sigma_slash(), TheorySpec::pa()}) {
      Natural e = reg.alloc(Prog::enum_consequences(Expr::lit(t.code())));
      ConsequenceEnumerator en{t};
      en.run_to(3000);
      auto r = reg.run(e, 3000);
      REQUIRE(r.elements.size() == en.size());
      for (std::size_t i = 0; i < en.size(); ++i) CHECK(r.elements[i] == encode(en.at(i)));
    }
    Natural bad = reg.alloc(Prog::enum_consequences(Expr::lit(cantor_pair(Natural(1) << 20, Natural(0)))));
    CHECK(reg.run(bad, 10).exhausted);
  }
}

TEST_SUITE("smn") {
  TEST_CASE("sections") {
    Registry reg;
    Natural e = reg.alloc(Prog::emit({Expr::lit(cantor_pair(3, 10)), Expr::lit(cantor_pair(4, 20))}));
    Natural s = reg.smn(e, 3);
    CHECK(s % 2 == 1);
    CHECK(reg.allocated(s));
    CHECK(reg.program(s) == Prog::section(L(3), Prog::run_index(Expr::lit(e))));
    auto r = reg.run(s, 100);
    CHECK(r.elements == std::vector<Natural>{10});
    CHECK(r.exhausted);
    Natural empty = reg.alloc(Prog::emit({}));
    CHECK(reg.run(reg.smn(empty, 5), 100).elements.empty());
    CHECK_THROWS_AS(reg.smn(100, 1), UnallocatedIndex);
  }

  TEST_CASE("layered sections") {
    Registry reg;
    std::mt19937_64 rng(5);
    std::vector<Expr> items;
    for (int i = 0; i < 200; ++i)
      items.push_back(Expr::lit(cantor_pair(Natural(static_cast<unsigned long>(rng() % 3)),
                                            cantor_pair(Natural(static_cast<unsigned long>(rng() % 3)),
                                                        Natural(static_cast<unsigned long>(rng() % 40))))));
    Natural e = reg.alloc(Prog::emit(items));
    auto all = reg.run(e, 1000).elements;
    for (unsigned long a = 0; a < 3; ++a) {
      for (unsigned long b = 0; b < 3; ++b) {
        std::set<Natural> expected;
        for (const Natural& z : all) {
          auto [x, rest] = cantor_unpair(z);
          auto [y, m] = cantor_unpair(rest);
          if (x == a && y == b) expected.insert(m);
        }
        auto r = reg.run(reg.smn(reg.smn(e, a), b), 100000);
        CHECK(r.exhausted);
        CHECK(as_set(r.elements) == expected);
      }
    }
  }
}

TEST_SUITE("fixed points") {
  TEST_CASE("identity transformer") {
    Registry reg;
    Template id = Prog::run_index(Expr::param());
    Natural e = fixed_point(reg, id);
    Natural fe = apply_transformer(reg, id, e);
    for (std::uint64_t b : {10, 100, 1000}) CHECK(reg.run(e, b).elements == reg.run(fe, b).elements);
  }

  TEST_CASE("quine") {
    Registry reg;
    reg.alloc(Prog::emit({L(4)}));
    Template t = Prog::emit({Expr::param()});
    Natural a = fixed_point(reg, t);
    CHECK(reg.run(a, 10).elements == std::vector<Natural>{a});
    Natural b = fixed_point_classical(reg, t);
    auto r = reg.run(b, 20000);
    CHECK(as_set(r.elements) == std::set<Natural>{b});
  }

  TEST_CASE("random templates") {
    RandomProgs gen(2024);
    for (int i = 0; i < 20; ++i) {
      Registry reg;
      reg.alloc(gen.finite(2));
      reg.alloc(gen.finite(2));
      Template t = gen.templ(3, 2);
      Natural a = fixed_point(reg, t);
      Natural b = fixed_point_classical(reg, t);
      Natural fa = apply_transformer(reg, t, a);
      Natural fb = apply_transformer(reg, t, b);
      constexpr std::uint64_t B = 20000;
      auto wa = at_most(reg.run(a, B).elements, 50), wfa = at_most(reg.run(fa, B).elements, 50);
      auto wb = at_most(reg.run(b, B).elements, 50), wfb = at_most(reg.run(fb, B).elements, 50);
      CHECK_MESSAGE(wa == wfa, to_sexpr(t));
      CHECK_MESSAGE(wb == wfb, to_sexpr(t));
    }
  }

  TEST_CASE("transcripts replay") {
    RandomProgs gen(8);
    Registry reg;
    for (int i = 0; i < 10; ++i) reg.alloc(instantiate(gen.templ(3, static_cast<unsigned>(reg.size())), Expr::self()));
    Natural star = fixed_point(reg, consequences_transformer());
    std::string text = reg.transcript();
    Registry copy;
    copy.replay("# saved session\n\n" + text);
    CHECK(copy.transcript() == text);
    for (std::size_t k = 0; k < reg.size(); ++k) {
      Natural i(static_cast<unsigned long>(2 * k));
      CHECK(copy.run(i, 2000).elements == reg.run(i, 2000).elements);
    }
    CHECK(copy.run(star, 500).elements == reg.run(star, 500).elements);
    Registry wrong;
    CHECK_THROWS_AS(wrong.replay("alloc 2 (Emit)\n"), std::invalid_argument);
    CHECK_THROWS_AS(wrong.replay("free 0 (Emit)\n"), std::invalid_argument);
  }

  TEST_CASE("consequences transformer") {
    Registry reg;
    Natural f0 = apply_transformer(reg, consequences_transformer(), 0);
    ConsequenceEnumerator en{TheorySpec::sigma_prime_e(0)};
    en.run_to(2000);
    auto r = reg.run(f0, 2000);
    REQUIRE(r.elements.size() == en.size());
    for (std::size_t i = 0; i < en.size(); ++i) CHECK(r.elements[i] == encode(en.at(i)));

    Natural star = fixed_point(reg, consequences_transformer());
    CHECK(reg.program(star) == Prog::enum_consequences(Expr::pair(Expr::lit(TheorySpec::sigma_prime_e(0).mask()), Expr::self())));
    Formula zz = parse_formula("0 = 0");
    Natural g = encode(gnum_instance(zz, star));
    Natural kg = encode(Formula::known(gnum_instance(zz, star)));
    CHECK(reg.first_emission(star, g, 100000));
    CHECK(reg.first_emission(star, kg, 100000));
    CHECK_FALSE(reg.first_emission(star, encode(parse_formula("~(0 = 0)")), 100000));
  }
}
