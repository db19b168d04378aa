#include "dichotomy/syntax/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <vector>

namespace dichotomy {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

enum class Tok { End, Ident, Number, LParen, RParen, Comma, Dot, Equals, Plus, Star, Tilde, And, Or, Arrow, DoubleArrow };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::DoubleArrow, "<->", start});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case '=': kind = Tok::Equals; break;
      case '+': kind = Tok::Plus; break;
      case '*': kind = Tok::Star; break;
      case '~': kind = Tok::Tilde; break;
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

std::optional<VarIndex> variable_index(const std::string& ident) {
  if (ident.size() < 2 || ident[0] != 'x') return std::nullopt;
  for (std::size_t i = 1; i < ident.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return std::nullopt;
  if (ident.size() > 2 && ident[1] == '0') return std::nullopt;
  const Natural n = parse_natural(std::string_view(ident).substr(1));
  auto v = to_u64(n);
  if (!v || *v > std::numeric_limits<VarIndex>::max()) return std::nullopt;
  return static_cast<VarIndex>(*v);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula whole_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Term whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(Tok::Ident) && peek().text == kw; }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    return toks_[pos_++];
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.pos, message + ", found " + found);
  }

  void expect_end() {
    if (!at(Tok::End)) fail("expected end of input");
  }

  bool at_quantifier() const { return at_keyword("forall") || at_keyword("exists"); }

  Formula formula() {
    if (at_quantifier()) return quantified();
    return biconditional();
  }

  Formula quantified() {
    const bool universal = peek().text == "forall";
    ++pos_;
    const VarIndex v = variable();
    expect(Tok::Dot, "'.' after quantified variable");
    Formula body = formula();
    return universal ? Formula::forall(v, body) : Formula::exists(v, body);
  }

  Formula biconditional() {
    Formula left = implication();
    if (accept(Tok::DoubleArrow)) return Formula::iff(left, formula());
    return left;
  }

  Formula implication() {
    Formula left = disjunction();
    if (accept(Tok::Arrow)) {
      Formula right = at_quantifier() ? quantified() : implication();
      return Formula::implies(left, right);
    }
    return left;
  }

  Formula disjunction() {
    Formula left = conjunction();
    while (accept(Tok::Or)) left = Formula::disj(left, conjunction());
    return left;
  }

  Formula conjunction() {
    Formula left = unary();
    while (accept(Tok::And)) left = Formula::conj(left, unary());
    return left;
  }

  Formula unary() {
    if (accept(Tok::Tilde)) return Formula::negation(unary());
    if (at_quantifier()) return quantified();
    if (at_keyword("K")) {
      ++pos_;
      expect(Tok::LParen, "'(' after K");
      Formula inner = formula();
      expect(Tok::RParen, "')' closing K(");
      return Formula::known(inner);
    }
    if (at_keyword("In")) {
      ++pos_;
      expect(Tok::LParen, "'(' after In");
      Term member = term();
      expect(Tok::Comma, "',' in In(t, t)");
      Term index = term();
      expect(Tok::RParen, "')' closing In(");
      return Formula::in(member, index);
    }
    if (at(Tok::LParen)) {
      // Either a parenthesized formula or an equation whose left side is a
      // parenthesized term.
      const std::size_t saved = pos_;
      std::optional<ParseError> as_formula;
      try {
        ++pos_;
        Formula f = formula();
        expect(Tok::RParen, "')'");
        if (!at(Tok::Equals) && !at(Tok::Plus) && !at(Tok::Star)) return f;
      } catch (const ParseError& e) {
        as_formula = e;
      }
      pos_ = saved;
      try {
        return equation();
      } catch (const ParseError& e) {
        // Report whichever reading got further.
        if (as_formula && as_formula->position() >= e.position()) throw *as_formula;
        throw;
      }
    }
    return equation();
  }

  Formula equation() {
    Term left = term();
    expect(Tok::Equals, "'='");
    Term right = term();
    return Formula::eq(left, right);
  }

  VarIndex variable() {
    if (!at(Tok::Ident)) fail("expected a variable");
    auto v = variable_index(peek().text);
    if (!v) throw ParseError(peek().pos, "unknown identifier '" + peek().text + "' (variables are x0, x1, ...)");
    ++pos_;
    return *v;
  }

  Term term() {
    Term left = product();
    while (accept(Tok::Plus)) left = Term::plus(left, product());
    return left;
  }

  Term product() {
    Term left = term_atom();
    while (accept(Tok::Star)) left = Term::times(left, term_atom());
    return left;
  }

  Term term_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        if (t.text != "0") throw ParseError(t.pos, "bare numeral '" + t.text + "' (write num " + t.text + ")");
        ++pos_;
        return Term::zero();
      case Tok::LParen: {
        ++pos_;
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident: {
        if (t.text == "S" || t.text == "diag") {
          const bool succ = t.text == "S";
          ++pos_;
          expect(Tok::LParen, succ ? "'(' after S" : "'(' after diag");
          Term inner = term();
          expect(Tok::RParen, "')'");
          return succ ? Term::succ(inner) : Term::diag(inner);
        }
        if (t.text == "num") {
          ++pos_;
          const Token& n = expect(Tok::Number, "a decimal numeral after num");
          return Term::num(parse_natural(n.text));
        }
        if (auto v = variable_index(t.text)) {
          ++pos_;
          return Term::var(*v);
        }
        throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
      }
      default:
        fail("expected a term");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).whole_formula(); }
Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

}  // namespace dichotomy
