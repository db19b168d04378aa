#include "dichotomy/calculus/lemmas.hpp"

#include "dichotomy/calculus/hilbertize.hpp"

namespace dichotomy::lemmas {

namespace {

Formula imp(const Formula& a, const Formula& b) { return Formula::implies(a, b); }
Formula neg(const Formula& a) { return Formula::negation(a); }

// (~B -> ~A) -> ((~B -> A) -> B)
Formula ax3(const Formula& a, const Formula& b) {
  return imp(imp(neg(b), neg(a)), imp(imp(neg(b), a), b));
}

}  // namespace

Proof identity(const Formula& a) {
  Script s;
  return s.finish(s.discharge(s.assume(a)));
}

Proof double_negation(const Formula& a) {
  Script s;
  auto h = s.assume(neg(neg(a)));
  auto l1 = s.logic(Schema::PropAx1, imp(neg(neg(a)), imp(neg(a), neg(neg(a)))));
  auto l2 = s.mp(h, l1);  // ~A -> ~~A
  auto l3 = s.mp(l2, s.logic(Schema::PropAx3, ax3(neg(a), a)));
  auto l4 = s.mp(s.use(identity(neg(a))), l3);
  return s.finish(l4);
}

Proof double_negation_intro(const Formula& a) {
  Script s;
  auto h = s.assume(a);
  Formula nnn = neg(neg(neg(a)));
  auto l1 = s.mp(s.use(double_negation(neg(a))), s.logic(Schema::PropAx3, ax3(a, neg(neg(a)))));
  auto l2 = s.mp(h, s.logic(Schema::PropAx1, imp(a, imp(nnn, a))));
  return s.finish(s.mp(l2, l1));
}

Proof explosion(const Formula& b, const Formula& c) {
  Script s;
  auto nb = s.assume(neg(b));
  auto hb = s.assume(b);
  auto l1 = s.mp(nb, s.logic(Schema::PropAx1, imp(neg(b), imp(neg(c), neg(b)))));
  auto l2 = s.mp(hb, s.logic(Schema::PropAx1, imp(b, imp(neg(c), b))));
  auto l3 = s.mp(l1, s.logic(Schema::PropAx3, ax3(b, c)));
  return s.finish(s.mp(l2, l3));
}

Proof contra_reverse(const Formula& b, const Formula& c) {
  Script s;
  auto h = s.assume(imp(neg(c), neg(b)));
  auto hb = s.assume(b);
  auto l1 = s.mp(h, s.logic(Schema::PropAx3, ax3(b, c)));
  auto l2 = s.mp(hb, s.logic(Schema::PropAx1, imp(b, imp(neg(c), b))));
  return s.finish(s.mp(l2, l1));
}

Proof contrapose(const Formula& c, const Formula& b) {
  Script s;
  auto h = s.assume(imp(c, b));
  auto nnc = s.assume(neg(neg(c)));
  auto l1 = s.mp(s.mp(nnc, s.use(double_negation(c))), h);
  auto l2 = s.mp(l1, s.use(double_negation_intro(b)));
  auto l3 = s.discharge(l2);  // ~~C -> ~~B
  return s.finish(s.mp(l3, s.use(contra_reverse(neg(b), neg(c)))));
}

Proof negated_implication(const Formula& b, const Formula& c) {
  Script s;
  auto hb = s.assume(b);
  auto nc = s.assume(neg(c));
  auto bc = s.assume(imp(b, c));
  auto l1 = s.discharge(s.mp(hb, bc));  // (B -> C) -> C
  auto l2 = s.mp(l1, s.use(contrapose(imp(b, c), c)));
  return s.finish(s.mp(nc, l2));
}

Proof cases(const Formula& b, const Formula& c) {
  Script s;
  auto h1 = s.assume(imp(b, c));
  auto h2 = s.assume(imp(neg(b), c));
  auto l1 = s.mp(h1, s.use(contrapose(b, c)));       // ~C -> ~B
  auto l2 = s.mp(h2, s.use(contrapose(neg(b), c)));  // ~C -> ~~B
  auto l3 = s.mp(l2, s.logic(Schema::PropAx3, ax3(neg(b), c)));
  return s.finish(s.mp(l1, l3));
}

Proof consequentia_mirabilis(const Formula& a) {
  Script s;
  auto h = s.assume(imp(neg(a), a));
  auto l1 = s.mp(s.use(identity(neg(a))), s.logic(Schema::PropAx3, ax3(a, a)));
  return s.finish(s.mp(h, l1));
}

Proof and_left(const Formula& a, const Formula& b) {
  Script s;
  auto h = s.assume(Formula::conj(a, b));
  Formula anb = imp(a, neg(b));
  auto l1 = s.mp(s.use(explosion(a, neg(b))), s.use(contrapose(neg(a), anb)));
  auto l2 = s.mp(h, l1);  // ~~A
  return s.finish(s.mp(l2, s.use(double_negation(a))));
}

Proof and_right(const Formula& a, const Formula& b) {
  Script s;
  auto h = s.assume(Formula::conj(a, b));
  Formula anb = imp(a, neg(b));
  auto l1 = s.logic(Schema::PropAx1, imp(neg(b), anb));
  auto nnb = s.mp(h, s.mp(l1, s.use(contrapose(neg(b), anb))));
  return s.finish(s.mp(nnb, s.use(double_negation(b))));
}

Proof and_intro(const Formula& a, const Formula& b) {
  Script s;
  auto ha = s.assume(a);
  auto hb = s.assume(b);
  auto nnb = s.mp(hb, s.use(double_negation_intro(b)));
  auto l1 = s.mp(ha, s.use(negated_implication(a, neg(b))));
  return s.finish(s.mp(nnb, l1));
}

Proof iff_forward(const Formula& a, const Formula& b) { return and_left(imp(a, b), imp(b, a)); }

Proof iff_backward(const Formula& a, const Formula& b) { return and_right(imp(a, b), imp(b, a)); }

}  // namespace dichotomy::lemmas
