#include "dichotomy/syntax/ground_eval.hpp"

#include "dichotomy/selfref/diag_fn.hpp"
#include "dichotomy/syntax/printer.hpp"

namespace dichotomy {

namespace {

Natural eval(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return 0;
    case Term::Kind::NumLit:
      return t.value();
    case Term::Kind::Succ:
      return eval(t.arg()) + 1;
    case Term::Kind::Plus:
      return eval(t.arg(0)) + eval(t.arg(1));
    case Term::Kind::Times:
      return eval(t.arg(0)) * eval(t.arg(1));
    case Term::Kind::Diag:
      return diag_fn(eval(t.arg()));
    case Term::Kind::Var:
      break;
  }
  throw OpenTermError("variable in ground term");
}

}  // namespace

Natural eval_ground_term(const Term& t) {
  if (!t.is_closed()) throw OpenTermError("term is not closed: " + to_string(t));
  return eval(t);
}

}  // namespace dichotomy
