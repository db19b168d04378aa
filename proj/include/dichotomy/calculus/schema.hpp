#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dichotomy/natural.hpp"

namespace dichotomy {

/// Axiom schemas. The first seven are the logical axioms, available in every
/// theory; the rest are selected per theory.
enum class Schema : std::uint8_t {
  PropAx1,
  PropAx2,
  PropAx3,
  QInst,
  QDistr,
  EqRefl,
  EqSubst,
  PAAxiom,
  Induction,
  Comp,
  KT,
  KMP,
  KArith,
  Closure,
  Factivity,
  KFactivity,
  GNum,
  KGNum,
};

inline constexpr int kSchemaCount = 18;
inline constexpr int kFirstTheorySchema = static_cast<int>(Schema::PAAxiom);

constexpr bool is_logic_schema(Schema s) { return static_cast<int>(s) < kFirstTheorySchema; }
constexpr bool is_indexed_schema(Schema s) { return s == Schema::GNum || s == Schema::KGNum; }

std::string_view schema_name(Schema s);
std::optional<Schema> schema_from_name(std::string_view name);

/// A schema together with its index parameter; `e` is meaningful only for
/// GNum and KGNum.
struct SchemaId {
  Schema kind;
  Natural e = 0;

  friend bool operator==(const SchemaId& a, const SchemaId& b) {
    return a.kind == b.kind && (!is_indexed_schema(a.kind) || a.e == b.e);
  }
};

/// A finite menu of theory schemas sharing one index parameter e. The
/// logical schemas are implicit.
class TheorySpec {
 public:
  TheorySpec() = default;
  TheorySpec(std::initializer_list<Schema> schemas, Natural e = 0);

  static TheorySpec sigma_machine();
  static TheorySpec sigma_slash();
  static TheorySpec sigma_e(const Natural& e);
  static TheorySpec sigma_prime_e(const Natural& e);
  static TheorySpec pa();
  static TheorySpec pa_comp();

  bool contains(Schema s) const;
  bool contains(const SchemaId& id) const;
  TheorySpec with(Schema s) const;
  TheorySpec without(Schema s) const;
  const Natural& e() const { return e_; }
  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }

  /// Theory schemas in declaration order.
  std::vector<Schema> schemas() const;

  /// cantor_pair(mask, e). from_code throws std::invalid_argument on a mask
  /// with bits outside the theory schemas.
  Natural code() const;
  static TheorySpec from_code(const Natural& code);
  static Natural mask_of(const TheorySpec& t) { return Natural(static_cast<unsigned long>(t.mask_)); }

  /// Preset name if one matches, else the comma-separated schema list;
  /// followed by " e=<n>" when an indexed schema is present.
  std::string to_string() const;

  /// Parses a comma-separated list of preset names and schema names. An item
  /// prefixed with '-' removes, otherwise adds. `none` is the empty theory.
  /// Presets: sigma_machine, sigma_slash, sigma_e, sigma_prime_e, pa, pa_comp.
  static TheorySpec parse(std::string_view expr, const Natural& e);

  friend bool operator==(const TheorySpec& a, const TheorySpec& b) {
    return a.mask_ == b.mask_ && a.e_ == b.e_;
  }

 private:
  std::uint32_t mask_ = 0;
  Natural e_ = 0;
};

}  // namespace dichotomy
