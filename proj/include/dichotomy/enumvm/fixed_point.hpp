#pragma once

#include "dichotomy/enumvm/registry.hpp"

namespace dichotomy::vm {

/// A transformer is a program template whose free Param is the input index;
/// it denotes the total function e -> index of template[Param := e].
using Template = Prog;

/// Allocates template[Param := e] and returns its index.
Natural apply_transformer(Registry& reg, const Template& f, const Natural& e);

/// Recursion theorem by self-reference: allocates template[Param := Self].
/// The returned e satisfies W_e = W_f(e).
Natural fixed_point(Registry& reg, const Template& f);

/// Recursion theorem by the classical s-m-n argument: with
/// v = Family(f[Param := smn(Param, Param)]), returns smn(v, v). Only v is
/// allocated.
Natural fixed_point_classical(Registry& reg, const Template& f);

/// e -> EnumConsequences(code of the machine theory sigma'_e).
Template consequences_transformer();

}  // namespace dichotomy::vm
