#include "dichotomy/syntax/printer.hpp"

#include <ostream>

namespace dichotomy {

namespace {

enum TermLevel { kSum = 0, kProduct = 1, kTermAtom = 2 };
enum FormulaLevel { kQuant = 0, kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5 };

void print_term(std::string& out, const Term& t, int min_level);

void wrap(std::string& out, int level, int min_level, auto&& body) {
  if (level < min_level) out += '(';
  body();
  if (level < min_level) out += ')';
}

void print_term(std::string& out, const Term& t, int min_level) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += 'x';
      out += std::to_string(t.index());
      return;
    case Term::Kind::Zero:
      out += '0';
      return;
    case Term::Kind::Succ:
      out += "S(";
      print_term(out, t.arg(), kSum);
      out += ')';
      return;
    case Term::Kind::Diag:
      out += "diag(";
      print_term(out, t.arg(), kSum);
      out += ')';
      return;
    case Term::Kind::NumLit:
      out += "num ";
      out += t.value().get_str();
      return;
    case Term::Kind::Plus:
      wrap(out, kSum, min_level, [&] {
        print_term(out, t.arg(0), kSum);
        out += " + ";
        print_term(out, t.arg(1), kProduct);
      });
      return;
    case Term::Kind::Times:
      wrap(out, kProduct, min_level, [&] {
        print_term(out, t.arg(0), kProduct);
        out += " * ";
        print_term(out, t.arg(1), kTermAtom);
      });
      return;
  }
}

void print_formula(std::string& out, const Formula& f, int min_level);

void open(std::string& out, int level, int min_level) {
  if (level < min_level) out += '(';
}
void close(std::string& out, int level, int min_level) {
  if (level < min_level) out += ')';
}

void print_formula(std::string& out, const Formula& f, int min_level) {
  if (auto bi = match_iff(f)) {
    open(out, kIff, min_level);
    print_formula(out, bi->left, kImp);
    out += " <-> ";
    print_formula(out, bi->right, kIff);
    close(out, kIff, min_level);
    return;
  }
  if (auto c = match_conj(f)) {
    open(out, kAnd, min_level);
    print_formula(out, c->left, kAnd);
    out += " & ";
    print_formula(out, c->right, kUnary);
    close(out, kAnd, min_level);
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::Eq:
      print_term(out, f.term(0), kSum);
      out += " = ";
      print_term(out, f.term(1), kSum);
      return;
    case Formula::Kind::InW:
      out += "In(";
      print_term(out, f.term(0), kSum);
      out += ", ";
      print_term(out, f.term(1), kSum);
      out += ')';
      return;
    case Formula::Kind::KAtom:
      out += "K(";
      print_formula(out, f.sub(), kQuant);
      out += ')';
      return;
    case Formula::Kind::Not: {
      const Formula& inner = f.sub();
      if (inner.is(Formula::Kind::Forall) && inner.sub().is(Formula::Kind::Not)) {
        open(out, kQuant, min_level);
        out += "exists x" + std::to_string(inner.bound()) + ". ";
        print_formula(out, inner.sub().sub(), kQuant);
        close(out, kQuant, min_level);
        return;
      }
      out += '~';
      print_formula(out, inner, kUnary);
      return;
    }
    case Formula::Kind::Imp:
      open(out, kImp, min_level);
      print_formula(out, f.sub(0), kOr);
      out += " -> ";
      print_formula(out, f.sub(1), kImp);
      close(out, kImp, min_level);
      return;
    case Formula::Kind::Forall:
      open(out, kQuant, min_level);
      out += "forall x" + std::to_string(f.bound()) + ". ";
      print_formula(out, f.sub(), kQuant);
      close(out, kQuant, min_level);
      return;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_term(out, t, kSum);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print_formula(out, f, kQuant);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

}  // namespace dichotomy
