#include "dichotomy/calculus/schema.hpp"

#include <array>
#include <stdexcept>

namespace dichotomy {

namespace {

constexpr std::array<std::string_view, kSchemaCount> kNames = {
    "PropAx1", "PropAx2",  "PropAx3", "QInst",     "QDistr",     "EqRefl",
    "EqSubst", "PAAxiom",  "Induction", "Comp",    "KT",         "KMP",
    "KArith",  "Closure",  "Factivity", "KFactivity", "GNum",    "KGNum",
};

std::uint32_t bit(Schema s) { return 1u << (static_cast<int>(s) - kFirstTheorySchema); }

constexpr std::uint32_t kAllBits = (1u << (kSchemaCount - kFirstTheorySchema)) - 1;

struct Preset {
  std::string_view name;
  TheorySpec (*make)(const Natural&);
};

const std::array<Preset, 6>& presets() {
  static const std::array<Preset, 6> table = {{
      {"sigma_machine", [](const Natural&) { return TheorySpec::sigma_machine(); }},
      {"sigma_slash", [](const Natural&) { return TheorySpec::sigma_slash(); }},
      {"sigma_e", [](const Natural& e) { return TheorySpec::sigma_e(e); }},
      {"sigma_prime_e", [](const Natural& e) { return TheorySpec::sigma_prime_e(e); }},
      {"pa", [](const Natural&) { return TheorySpec::pa(); }},
      {"pa_comp", [](const Natural&) { return TheorySpec::pa_comp(); }},
  }};
  return table;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view schema_name(Schema s) { return kNames[static_cast<int>(s)]; }

std::optional<Schema> schema_from_name(std::string_view name) {
  for (int k = 0; k < kSchemaCount; ++k)
    if (kNames[k] == name) return static_cast<Schema>(k);
  return std::nullopt;
}

TheorySpec::TheorySpec(std::initializer_list<Schema> schemas, Natural e) : e_(std::move(e)) {
  for (Schema s : schemas)
    if (!is_logic_schema(s)) mask_ |= bit(s);
}

TheorySpec TheorySpec::sigma_machine() {
  return {Schema::KT, Schema::KMP, Schema::KArith, Schema::Closure, Schema::Factivity};
}

TheorySpec TheorySpec::sigma_slash() {
  return sigma_machine().with(Schema::PAAxiom).with(Schema::Induction).with(Schema::Comp);
}

TheorySpec TheorySpec::sigma_e(const Natural& e) {
  TheorySpec t = sigma_slash().with(Schema::KFactivity).with(Schema::KGNum);
  t.e_ = e;
  return t;
}

TheorySpec TheorySpec::sigma_prime_e(const Natural& e) {
  TheorySpec t{Schema::PAAxiom, Schema::Induction, Schema::Comp, Schema::KT,   Schema::KMP,
               Schema::KArith,  Schema::Closure,   Schema::GNum, Schema::KGNum};
  t.e_ = e;
  return t;
}

TheorySpec TheorySpec::pa() { return {Schema::PAAxiom, Schema::Induction}; }

TheorySpec TheorySpec::pa_comp() { return {Schema::PAAxiom, Schema::Induction, Schema::Comp}; }

bool TheorySpec::contains(Schema s) const { return !is_logic_schema(s) && (mask_ & bit(s)) != 0; }

bool TheorySpec::contains(const SchemaId& id) const {
  if (is_logic_schema(id.kind)) return true;
  return contains(id.kind) && (!is_indexed_schema(id.kind) || id.e == e_);
}

TheorySpec TheorySpec::with(Schema s) const {
  TheorySpec t = *this;
  if (!is_logic_schema(s)) t.mask_ |= bit(s);
  return t;
}

TheorySpec TheorySpec::without(Schema s) const {
  TheorySpec t = *this;
  if (!is_logic_schema(s)) t.mask_ &= ~bit(s);
  return t;
}

std::vector<Schema> TheorySpec::schemas() const {
  std::vector<Schema> out;
  for (int k = kFirstTheorySchema; k < kSchemaCount; ++k)
    if (contains(static_cast<Schema>(k))) out.push_back(static_cast<Schema>(k));
  return out;
}

Natural TheorySpec::code() const { return cantor_pair(mask_of(*this), e_); }

TheorySpec TheorySpec::from_code(const Natural& code) {
  auto [mask, e] = cantor_unpair(code);
  if (mask > kAllBits) throw std::invalid_argument("not a theory code: " + code.get_str());
  TheorySpec t;
  t.mask_ = static_cast<std::uint32_t>(mask.get_ui());
  t.e_ = e;
  return t;
}

std::string TheorySpec::to_string() const {
  std::string out;
  for (const Preset& p : presets())
    if (p.make(e_) == *this) {
      out = p.name;
      break;
    }
  if (out.empty()) {
    for (Schema s : schemas()) {
      if (!out.empty()) out += ',';
      out += schema_name(s);
    }
    if (out.empty()) out = "none";
  }
  if (contains(Schema::GNum) || contains(Schema::KGNum)) out += " e=" + e_.get_str();
  return out;
}

TheorySpec TheorySpec::parse(std::string_view expr, const Natural& e) {
  TheorySpec t;
  t.e_ = e;
  while (true) {
    std::size_t comma = expr.find(',');
    std::string_view item = trim(expr.substr(0, comma));
    bool remove = !item.empty() && item.front() == '-';
    if (remove || (!item.empty() && item.front() == '+')) item = trim(item.substr(1));
    if (item.empty()) throw std::invalid_argument("empty theory item");
    TheorySpec part;
    if (item == "none") {
      part = TheorySpec();
    } else if (auto s = schema_from_name(item)) {
      if (is_logic_schema(*s)) throw std::invalid_argument("logical schema in theory: " + std::string(item));
      part = TheorySpec{*s};
    } else {
      bool found = false;
      for (const Preset& p : presets())
        if (p.name == item) {
          part = p.make(e);
          found = true;
        }
      if (!found) throw std::invalid_argument("unknown theory item: " + std::string(item));
    }
    if (remove)
      t.mask_ &= ~part.mask_;
    else
      t.mask_ |= part.mask_;
    if (comma == std::string_view::npos) break;
    expr.remove_prefix(comma + 1);
  }
  return t;
}

}  // namespace dichotomy
