#include "dichotomy/selfref/diagonal.hpp"

#include "dichotomy/calculus/hilbertize.hpp"
#include "dichotomy/calculus/lemmas.hpp"
#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/substitution.hpp"

namespace dichotomy {

DiagonalResult diagonal_general(const Formula& templ) {
  Formula theta = substitute(templ, 0, Term::diag(Term::var(0)));
  Term d = Term::diag(Term::num(encode(theta)));
  Formula phi = substitute(templ, 0, d);
  Term c = Term::num(encode(phi));
  Formula target = substitute(templ, 0, c);

  Script s;
  auto dc = s.theory({Schema::Comp}, Formula::eq(d, c));
  auto cd = s.theory({Schema::Comp}, Formula::eq(c, d));
  auto fwd = s.mp(dc, s.logic(Schema::EqSubst, Formula::implies(Formula::eq(d, c), Formula::implies(phi, target))));
  auto bwd = s.mp(cd, s.logic(Schema::EqSubst, Formula::implies(Formula::eq(c, d), Formula::implies(target, phi))));
  auto intro = s.use(lemmas::and_intro(Formula::implies(phi, target), Formula::implies(target, phi)));
  Proof proof = s.finish(s.mp(bwd, s.mp(fwd, intro)));
  return {std::move(theta), std::move(phi), std::move(proof)};
}

DiagonalResult build_diagonal(const Natural& e) {
  return diagonal_general(Formula::negation(Formula::in(Term::var(0), Term::num(e))));
}

}  // namespace dichotomy
