#include "dichotomy/selfref/refutation.hpp"

#include "dichotomy/calculus/hilbertize.hpp"
#include "dichotomy/calculus/lemmas.hpp"
#include "dichotomy/calculus/recognizer.hpp"
#include "dichotomy/selfref/diagonal.hpp"
#include "dichotomy/syntax/codec.hpp"

namespace dichotomy {

namespace {

Formula imp(const Formula& a, const Formula& b) { return Formula::implies(a, b); }
Formula K(const Formula& a) { return Formula::known(a); }

}  // namespace

Proof build_refutation(const Natural& e) {
  DiagonalResult diag = build_diagonal(e);
  const Formula& phi = diag.phi;
  const Formula& in_d = phi.sub();  // In(D, E)
  Term d = in_d.term(0);
  Term idx = in_d.term(1);
  Term c = Term::num(encode(phi));
  Formula in_c = Formula::in(c, idx);

  Formula s1 = Formula::eq(d, c);
  Formula s2 = imp(K(phi), phi);
  Formula s3 = gnum_instance(phi, e);  // K(phi) <-> In(c, E)
  Formula goal = imp(s1, imp(s2, imp(s3, phi)));

  // Assuming ~phi we obtain K(phi), hence phi.
  Script inner;
  auto h1 = inner.assume(s1);
  auto h2 = inner.assume(s2);
  auto h3 = inner.assume(s3);
  auto back = inner.mp(h3, inner.use(lemmas::iff_backward(K(phi), in_c)));
  auto not_phi = inner.assume(Formula::negation(phi));
  auto in_d_line = inner.mp(not_phi, inner.use(lemmas::double_negation(in_d)));
  auto subst = inner.mp(h1, inner.logic(Schema::EqSubst, imp(s1, imp(in_d, in_c))));
  auto k_phi = inner.mp(inner.mp(in_d_line, subst), back);
  auto mirabilis = inner.discharge(inner.mp(k_phi, h2));
  Proof argument = inner.finish(inner.mp(mirabilis, inner.use(lemmas::consequentia_mirabilis(phi))));

  Script s;
  s.lemma({kDiagonalArgument, argument.steps});
  auto known = s.theory({Schema::KT}, K(goal), kDiagonalArgument);
  auto kmp = [&](const Formula& a, const Formula& b, Script::Line kab, Script::Line ka) {
    return s.mp(ka, s.mp(kab, s.theory({Schema::KMP}, imp(K(imp(a, b)), imp(K(a), K(b))))));
  };
  auto k1 = kmp(s1, imp(s2, imp(s3, phi)), known, s.theory({Schema::KArith}, K(s1)));
  auto k2 = kmp(s2, imp(s3, phi), k1, s.theory({Schema::KFactivity}, K(s2)));
  auto ks3 = s.theory({Schema::KGNum, e}, K(s3));
  auto kphi = kmp(s3, phi, k2, ks3);

  auto fact = [&](const Formula& a, Script::Line ka) { return s.mp(ka, s.theory({Schema::Factivity}, imp(K(a), a))); };
  auto iff = fact(s3, ks3);
  auto member_c = s.mp(kphi, s.mp(iff, s.use(lemmas::iff_forward(K(phi), in_c))));
  auto not_member = fact(phi, kphi);
  auto cd = s.theory({Schema::Comp}, Formula::eq(c, d));
  auto member_d = s.mp(member_c, s.mp(cd, s.logic(Schema::EqSubst, imp(Formula::eq(c, d), imp(in_c, in_d)))));
  Formula falsum = Formula::negation(Formula::eq(Term::zero(), Term::zero()));
  auto boom = s.mp(member_d, s.mp(not_member, s.use(lemmas::explosion(in_d, falsum))));
  return s.finish(boom);
}

}  // namespace dichotomy
