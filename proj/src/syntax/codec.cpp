#include "dichotomy/syntax/codec.hpp"

#include <limits>

namespace dichotomy {

namespace {

Natural tagged(CodeTag tag, const Natural& payload) {
  return cantor_pair(Natural(static_cast<unsigned long>(tag)), payload);
}

}  // namespace

Natural encode(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return tagged(CodeTag::Var, Natural(static_cast<unsigned long>(t.index())));
    case Term::Kind::Zero:
      return tagged(CodeTag::Zero, Natural(0));
    case Term::Kind::Succ:
      return tagged(CodeTag::Succ, encode(t.arg()));
    case Term::Kind::Plus:
      return tagged(CodeTag::Plus, cantor_pair(encode(t.arg(0)), encode(t.arg(1))));
    case Term::Kind::Times:
      return tagged(CodeTag::Times, cantor_pair(encode(t.arg(0)), encode(t.arg(1))));
    case Term::Kind::NumLit:
      return tagged(CodeTag::NumLit, t.value());
    case Term::Kind::Diag:
      return tagged(CodeTag::Diag, encode(t.arg()));
  }
  throw std::logic_error("unreachable term kind");
}

Natural encode(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return tagged(CodeTag::Eq, cantor_pair(encode(f.term(0)), encode(f.term(1))));
    case Formula::Kind::InW:
      return tagged(CodeTag::InW, cantor_pair(encode(f.term(0)), encode(f.term(1))));
    case Formula::Kind::Not:
      return tagged(CodeTag::Not, encode(f.sub()));
    case Formula::Kind::Imp:
      return tagged(CodeTag::Imp, cantor_pair(encode(f.sub(0)), encode(f.sub(1))));
    case Formula::Kind::Forall:
      return tagged(CodeTag::Forall,
                    cantor_pair(Natural(static_cast<unsigned long>(f.bound())), encode(f.sub())));
    case Formula::Kind::KAtom:
      return tagged(CodeTag::KAtom, encode(f.sub()));
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

std::optional<unsigned> small_tag(const Natural& tag) {
  if (tag > 12) return std::nullopt;
  return static_cast<unsigned>(tag.get_ui());
}

}  // namespace

std::optional<Term> try_decode_term(const Natural& code) {
  if (code < 0) return std::nullopt;
  auto [tag_n, payload] = cantor_unpair(code);
  auto tag = small_tag(tag_n);
  if (!tag) return std::nullopt;
  switch (static_cast<CodeTag>(*tag)) {
    case CodeTag::Var: {
      auto v = to_u64(payload);
      if (!v || *v > std::numeric_limits<VarIndex>::max()) return std::nullopt;
      return Term::var(static_cast<VarIndex>(*v));
    }
    case CodeTag::Zero:
      if (payload != 0) return std::nullopt;
      return Term::zero();
    case CodeTag::Succ:
    case CodeTag::Diag: {
      auto inner = try_decode_term(payload);
      if (!inner) return std::nullopt;
      return static_cast<CodeTag>(*tag) == CodeTag::Succ ? Term::succ(*inner) : Term::diag(*inner);
    }
    case CodeTag::Plus:
    case CodeTag::Times: {
      auto [a, b] = cantor_unpair(payload);
      auto left = try_decode_term(a);
      if (!left) return std::nullopt;
      auto right = try_decode_term(b);
      if (!right) return std::nullopt;
      return static_cast<CodeTag>(*tag) == CodeTag::Plus ? Term::plus(*left, *right) : Term::times(*left, *right);
    }
    case CodeTag::NumLit:
      return Term::num(payload);
    default:
      return std::nullopt;
  }
}

std::optional<Formula> try_decode_formula(const Natural& code) {
  if (code < 0) return std::nullopt;
  auto [tag_n, payload] = cantor_unpair(code);
  auto tag = small_tag(tag_n);
  if (!tag) return std::nullopt;
  switch (static_cast<CodeTag>(*tag)) {
    case CodeTag::Eq:
    case CodeTag::InW: {
      auto [a, b] = cantor_unpair(payload);
      auto left = try_decode_term(a);
      if (!left) return std::nullopt;
      auto right = try_decode_term(b);
      if (!right) return std::nullopt;
      return static_cast<CodeTag>(*tag) == CodeTag::Eq ? Formula::eq(*left, *right) : Formula::in(*left, *right);
    }
    case CodeTag::Not:
    case CodeTag::KAtom: {
      auto inner = try_decode_formula(payload);
      if (!inner) return std::nullopt;
      return static_cast<CodeTag>(*tag) == CodeTag::Not ? Formula::negation(*inner) : Formula::known(*inner);
    }
    case CodeTag::Imp: {
      auto [a, b] = cantor_unpair(payload);
      auto left = try_decode_formula(a);
      if (!left) return std::nullopt;
      auto right = try_decode_formula(b);
      if (!right) return std::nullopt;
      return Formula::implies(*left, *right);
    }
    case CodeTag::Forall: {
      auto [v, body_code] = cantor_unpair(payload);
      auto var = to_u64(v);
      if (!var || *var > std::numeric_limits<VarIndex>::max()) return std::nullopt;
      auto body = try_decode_formula(body_code);
      if (!body) return std::nullopt;
      return Formula::forall(static_cast<VarIndex>(*var), *body);
    }
    default:
      return std::nullopt;
  }
}

Term decode_term(const Natural& code) {
  auto t = try_decode_term(code);
  if (!t) throw DecodeError("not the code of a term: " + code.get_str());
  return *t;
}

Formula decode_formula(const Natural& code) {
  auto f = try_decode_formula(code);
  if (!f) throw DecodeError("not the code of a formula: " + code.get_str());
  return *f;
}

Expression decode(const Natural& code) {
  if (auto t = try_decode_term(code)) return *t;
  if (auto f = try_decode_formula(code)) return *f;
  throw DecodeError("malformed code: " + code.get_str());
}

}  // namespace dichotomy
