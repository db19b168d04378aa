#include "dichotomy/enumvm/fixed_point.hpp"

#include "dichotomy/calculus/schema.hpp"

namespace dichotomy::vm {

Natural apply_transformer(Registry& reg, const Template& f, const Natural& e) {
  return reg.alloc(instantiate(f, Expr::lit(e)));
}

Natural fixed_point(Registry& reg, const Template& f) { return reg.alloc(instantiate(f, Expr::self())); }

Natural fixed_point_classical(Registry& reg, const Template& f) {
  Natural v = reg.alloc(Prog::family(instantiate(f, Expr::smn(Expr::param(), Expr::param()))));
  return reg.smn(v, v);
}

Template consequences_transformer() {
  Natural mask = TheorySpec::sigma_prime_e(0).mask();
  return Prog::enum_consequences(Expr::pair(Expr::lit(mask), Expr::param()));
}

}  // namespace dichotomy::vm
