#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dichotomy/natural.hpp"

namespace dichotomy::vm {

/// An index-valued expression. Self is the index of the registry entry the
/// program lives in; Param is bound by the nearest enclosing Family, or is
/// the argument of a transformer template.
struct Expr {
  enum class Kind : std::uint8_t { Lit, Self, Param, Smn, Pair };

  Kind kind = Kind::Lit;
  Natural value;  // Lit
  std::shared_ptr<const Expr> a, b;

  static Expr lit(Natural n);
  static Expr self();
  static Expr param();
  static Expr smn(Expr e, Expr n);
  static Expr pair(Expr x, Expr y);

  friend bool operator==(const Expr& x, const Expr& y);
};

struct Prog {
  enum class Kind : std::uint8_t { Emit, Interleave, MapPair, Section, RunIndex, EnumConsequences, Family };

  Kind kind = Kind::Emit;
  std::vector<Expr> exprs;  // Emit items; key of MapPair/Section; target of RunIndex/EnumConsequences
  std::vector<std::shared_ptr<const Prog>> kids;

  static Prog emit(std::vector<Expr> items);
  static Prog interleave(Prog p, Prog q);
  /// Emits pair(n, m) for each m emitted by the body.
  static Prog map_pair(Expr n, Prog body);
  /// Emits m for each pair(n, m) emitted by the body.
  static Prog section(Expr n, Prog body);
  static Prog run_index(Expr index);
  /// Emits the codes of the consequence stream of the theory with this code.
  static Prog enum_consequences(Expr theory_code);
  /// Emits pair(u, m) for each u and each m emitted by body[Param := u].
  static Prog family(Prog body);

  const Prog& kid(std::size_t i) const { return *kids.at(i); }
  friend bool operator==(const Prog& x, const Prog& y);
};

/// Replaces the free occurrences of Param; occurrences under a Family are
/// bound by it and left alone.
Expr instantiate(const Expr& e, const Expr& arg);
Prog instantiate(const Prog& p, const Expr& arg);
bool has_free_param(const Prog& p);

std::string to_sexpr(const Expr& e);
std::string to_sexpr(const Prog& p);

class ProgParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Prog parse_prog(std::string_view text);
Expr parse_expr(std::string_view text);

}  // namespace dichotomy::vm
