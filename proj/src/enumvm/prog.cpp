#include "dichotomy/enumvm/prog.hpp"

#include <cctype>

namespace dichotomy::vm {

Expr Expr::lit(Natural n) { return {Kind::Lit, std::move(n), nullptr, nullptr}; }
Expr Expr::self() { return {Kind::Self, Natural(0), nullptr, nullptr}; }
Expr Expr::param() { return {Kind::Param, Natural(0), nullptr, nullptr}; }
Expr Expr::smn(Expr e, Expr n) {
  return {Kind::Smn, Natural(0), std::make_shared<const Expr>(std::move(e)), std::make_shared<const Expr>(std::move(n))};
}
Expr Expr::pair(Expr x, Expr y) {
  return {Kind::Pair, Natural(0), std::make_shared<const Expr>(std::move(x)), std::make_shared<const Expr>(std::move(y))};
}

bool operator==(const Expr& x, const Expr& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Expr::Kind::Lit: return x.value == y.value;
    case Expr::Kind::Self:
    case Expr::Kind::Param: return true;
    default: return *x.a == *y.a && *x.b == *y.b;
  }
}

namespace {

Prog node(Prog::Kind k, std::vector<Expr> exprs, std::vector<Prog> kids) {
  Prog p;
  p.kind = k;
  p.exprs = std::move(exprs);
  for (Prog& q : kids) p.kids.push_back(std::make_shared<const Prog>(std::move(q)));
  return p;
}

}  // namespace

Prog Prog::emit(std::vector<Expr> items) { return node(Kind::Emit, std::move(items), {}); }
Prog Prog::interleave(Prog p, Prog q) { return node(Kind::Interleave, {}, {std::move(p), std::move(q)}); }
Prog Prog::map_pair(Expr n, Prog body) { return node(Kind::MapPair, {std::move(n)}, {std::move(body)}); }
Prog Prog::section(Expr n, Prog body) { return node(Kind::Section, {std::move(n)}, {std::move(body)}); }
Prog Prog::run_index(Expr index) { return node(Kind::RunIndex, {std::move(index)}, {}); }
Prog Prog::enum_consequences(Expr code) { return node(Kind::EnumConsequences, {std::move(code)}, {}); }
Prog Prog::family(Prog body) { return node(Kind::Family, {}, {std::move(body)}); }

bool operator==(const Prog& x, const Prog& y) {
  if (x.kind != y.kind || x.exprs != y.exprs || x.kids.size() != y.kids.size()) return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i)
    if (!(*x.kids[i] == *y.kids[i])) return false;
  return true;
}

Expr instantiate(const Expr& e, const Expr& arg) {
  switch (e.kind) {
    case Expr::Kind::Param: return arg;
    case Expr::Kind::Smn: return Expr::smn(instantiate(*e.a, arg), instantiate(*e.b, arg));
    case Expr::Kind::Pair: return Expr::pair(instantiate(*e.a, arg), instantiate(*e.b, arg));
    default: return e;
  }
}

Prog instantiate(const Prog& p, const Expr& arg) {
  if (p.kind == Prog::Kind::Family) return p;
  Prog out;
  out.kind = p.kind;
  for (const Expr& e : p.exprs) out.exprs.push_back(instantiate(e, arg));
  for (const auto& k : p.kids) out.kids.push_back(std::make_shared<const Prog>(instantiate(*k, arg)));
  return out;
}

namespace {

bool has_param(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Param: return true;
    case Expr::Kind::Smn:
    case Expr::Kind::Pair: return has_param(*e.a) || has_param(*e.b);
    default: return false;
  }
}

const char* kind_name(Prog::Kind k) {
  switch (k) {
    case Prog::Kind::Emit: return "Emit";
    case Prog::Kind::Interleave: return "Interleave";
    case Prog::Kind::MapPair: return "MapPair";
    case Prog::Kind::Section: return "Section";
    case Prog::Kind::RunIndex: return "RunIndex";
    case Prog::Kind::EnumConsequences: return "EnumConsequences";
    case Prog::Kind::Family: return "Family";
  }
  return "?";
}

}  // namespace

bool has_free_param(const Prog& p) {
  if (p.kind == Prog::Kind::Family) return false;
  for (const Expr& e : p.exprs)
    if (has_param(e)) return true;
  for (const auto& k : p.kids)
    if (has_free_param(*k)) return true;
  return false;
}

std::string to_sexpr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Lit: return e.value.get_str();
    case Expr::Kind::Self: return "Self";
    case Expr::Kind::Param: return "Param";
    case Expr::Kind::Smn: return "(Smn " + to_sexpr(*e.a) + " " + to_sexpr(*e.b) + ")";
    case Expr::Kind::Pair: return "(Pair " + to_sexpr(*e.a) + " " + to_sexpr(*e.b) + ")";
  }
  return "?";
}

std::string to_sexpr(const Prog& p) {
  std::string out = "(";
  out += kind_name(p.kind);
  for (const Expr& e : p.exprs) out += " " + to_sexpr(e);
  for (const auto& k : p.kids) out += " " + to_sexpr(*k);
  return out + ")";
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  void expect_end() {
    skip();
    if (pos_ != s_.size()) fail("trailing input");
  }

  Expr expr() {
    skip();
    if (peek() == '(') {
      ++pos_;
      std::string head = word();
      Expr x = expr();
      Expr y = expr();
      close();
      if (head == "Smn") return Expr::smn(std::move(x), std::move(y));
      if (head == "Pair") return Expr::pair(std::move(x), std::move(y));
      fail("unknown expression " + head);
    }
    std::string w = word();
    if (w == "Self") return Expr::self();
    if (w == "Param") return Expr::param();
    try {
      return Expr::lit(parse_natural(w));
    } catch (const std::exception&) {
      fail("bad expression '" + w + "'");
    }
  }

  Prog prog() {
    skip();
    if (peek() != '(') fail("expected '('");
    ++pos_;
    std::string head = word();
    Prog out;
    if (head == "Emit") {
      std::vector<Expr> items;
      while (skip(), peek() != ')') items.push_back(expr());
      out = Prog::emit(std::move(items));
    } else if (head == "Interleave") {
      Prog p = prog();
      out = Prog::interleave(std::move(p), prog());
    } else if (head == "MapPair" || head == "Section") {
      Expr n = expr();
      Prog body = prog();
      out = head == "MapPair" ? Prog::map_pair(std::move(n), std::move(body))
                              : Prog::section(std::move(n), std::move(body));
    } else if (head == "RunIndex") {
      out = Prog::run_index(expr());
    } else if (head == "EnumConsequences") {
      out = Prog::enum_consequences(expr());
    } else if (head == "Family") {
      out = Prog::family(prog());
    } else {
      fail("unknown program " + head);
    }
    close();
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ProgParseError(msg + " at offset " + std::to_string(pos_));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void close() {
    skip();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected a word");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Prog parse_prog(std::string_view text) {
  Reader r(text);
  Prog p = r.prog();
  r.expect_end();
  return p;
}

Expr parse_expr(std::string_view text) {
  Reader r(text);
  Expr e = r.expr();
  r.expect_end();
  return e;
}

}  // namespace dichotomy::vm
