#include "dichotomy/calculus/proof_io.hpp"

#include <charconv>
#include <sstream>

#include "dichotomy/syntax/parser.hpp"
#include "dichotomy/syntax/printer.hpp"

namespace dichotomy {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

void write_steps(std::ostringstream& out, const std::vector<Step>& steps) {
  for (std::size_t k = 0; k < steps.size(); ++k)
    out << k + 1 << ". " << to_string(steps[k].formula) << " ; "
        << justification_text(steps[k].justification) << '\n';
}

struct Reader {
  std::size_t line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ProofFormatError(line_no, msg); }

  std::size_t step_ref(std::string_view s) const {
    auto v = parse_index(s);
    if (!v || *v == 0) fail("bad step reference '" + std::string(s) + "'");
    return *v - 1;
  }

  Justification justification(std::string_view text) const {
    std::string_view head = text.substr(0, text.find(':'));
    std::string_view rest = head.size() < text.size() ? text.substr(head.size() + 1) : std::string_view{};
    if (head == "prop-ax") {
      if (rest == "1") return LogicAxiom{Schema::PropAx1};
      if (rest == "2") return LogicAxiom{Schema::PropAx2};
      if (rest == "3") return LogicAxiom{Schema::PropAx3};
      fail("prop-ax takes 1, 2 or 3");
    }
    if (head == "q-inst" && rest.empty()) return LogicAxiom{Schema::QInst};
    if (head == "q-distr" && rest.empty()) return LogicAxiom{Schema::QDistr};
    if (head == "eq-refl" && rest.empty()) return LogicAxiom{Schema::EqRefl};
    if (head == "eq-subst" && rest.empty()) return LogicAxiom{Schema::EqSubst};
    if (head == "comp" && rest.empty()) return TheoryAxiom{{Schema::Comp}, {}};
    if (head == "kt") {
      if (!is_name(rest)) fail("kt needs a lemma name");
      return TheoryAxiom{{Schema::KT}, std::string(rest)};
    }
    if (head == "ax") {
      std::string_view name = rest.substr(0, rest.find(':'));
      std::string_view param = name.size() < rest.size() ? rest.substr(name.size() + 1) : std::string_view{};
      auto schema = schema_from_name(name);
      if (!schema) fail("unknown schema '" + std::string(name) + "'");
      if (is_logic_schema(*schema)) return LogicAxiom{*schema};
      if (is_indexed_schema(*schema)) {
        try {
          return TheoryAxiom{{*schema, parse_natural(param)}, {}};
        } catch (const std::invalid_argument&) {
          fail(std::string(name) + " needs a numeric index");
        }
      }
      if (!param.empty() && !is_name(param)) fail("bad lemma name '" + std::string(param) + "'");
      return TheoryAxiom{{*schema}, std::string(param)};
    }
    if (head == "mp") {
      std::size_t comma = rest.find(',');
      if (comma == std::string_view::npos) fail("mp needs two step numbers");
      return ModusPonens{step_ref(rest.substr(0, comma)), step_ref(rest.substr(comma + 1))};
    }
    if (head == "gen") {
      std::size_t comma = rest.find(',');
      if (comma == std::string_view::npos) fail("gen needs a step and a variable");
      std::string_view var = trim(rest.substr(comma + 1));
      if (var.size() < 2 || var[0] != 'x') fail("gen needs a variable x<n>");
      auto v = parse_index(var.substr(1));
      if (!v || *v > 0xffffffffu) fail("bad variable '" + std::string(var) + "'");
      return Generalization{step_ref(rest.substr(0, comma)), static_cast<VarIndex>(*v)};
    }
    fail("unknown justification '" + std::string(text) + "'");
  }

  Step step(std::string_view line, std::size_t expected) const {
    std::size_t dot = line.find('.');
    auto number = dot == std::string_view::npos ? std::nullopt : parse_index(line.substr(0, dot));
    if (!number) fail("expected '<n>. <formula> ; <justification>'");
    if (*number != expected)
      fail("step numbered " + std::to_string(*number) + ", expected " + std::to_string(expected));
    std::string_view body = line.substr(dot + 1);
    std::size_t semi = body.rfind(';');
    if (semi == std::string_view::npos) fail("missing ';' before the justification");
    Formula f = [&] {
      try {
        return parse_formula(trim(body.substr(0, semi)));
      } catch (const ParseError& e) {
        fail(std::string("formula: ") + e.what());
      }
    }();
    return {f, justification(trim(body.substr(semi + 1)))};
  }
};

}  // namespace

ProofFormatError::ProofFormatError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string justification_text(const Justification& j) {
  if (auto* ax = std::get_if<LogicAxiom>(&j)) {
    switch (ax->schema) {
      case Schema::PropAx1: return "prop-ax:1";
      case Schema::PropAx2: return "prop-ax:2";
      case Schema::PropAx3: return "prop-ax:3";
      case Schema::QInst: return "q-inst";
      case Schema::QDistr: return "q-distr";
      case Schema::EqRefl: return "eq-refl";
      case Schema::EqSubst: return "eq-subst";
      default: return "ax:" + std::string(schema_name(ax->schema));
    }
  }
  if (auto* ax = std::get_if<TheoryAxiom>(&j)) {
    Schema s = ax->schema.kind;
    if (s == Schema::Comp) return "comp";
    if (s == Schema::KT) return "kt:" + ax->lemma;
    std::string out = "ax:" + std::string(schema_name(s));
    if (is_indexed_schema(s)) out += ":" + ax->schema.e.get_str();
    if (!ax->lemma.empty()) out += ":" + ax->lemma;
    return out;
  }
  if (auto* mp = std::get_if<ModusPonens>(&j))
    return "mp:" + std::to_string(mp->premise + 1) + "," + std::to_string(mp->implication + 1);
  const auto& g = std::get<Generalization>(j);
  return "gen:" + std::to_string(g.step + 1) + ",x" + std::to_string(g.var);
}

std::string write_proof(const Proof& proof, const TheorySpec& theory) {
  std::ostringstream out;
  out << "theory: " << theory.to_string() << '\n';
  for (const Lemma& l : proof.lemmas) {
    out << "lemma " << l.name << ":\n";
    write_steps(out, l.steps);
    out << "end\n";
  }
  write_steps(out, proof.steps);
  return out.str();
}

ProofFile read_proof(std::string_view text) {
  ProofFile file;
  Reader r;
  Lemma* open = nullptr;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++r.line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("theory:", 0) == 0) {
      if (file.theory || open || !file.proof.steps.empty() || !file.proof.lemmas.empty())
        r.fail("the theory header must come first");
      std::string_view rest = trim(line.substr(7));
      Natural e = 0;
      std::size_t pos = rest.rfind("e=");
      if (pos != std::string_view::npos && (pos == 0 || rest[pos - 1] == ' ')) {
        try {
          e = parse_natural(trim(rest.substr(pos + 2)));
        } catch (const std::invalid_argument&) {
          r.fail("bad e=<n> in theory header");
        }
        rest = trim(rest.substr(0, pos));
      }
      try {
        file.theory = TheorySpec::parse(rest, e);
      } catch (const std::invalid_argument& ex) {
        r.fail(ex.what());
      }
      continue;
    }
    if (line.rfind("lemma ", 0) == 0) {
      if (open) r.fail("nested lemma");
      if (!file.proof.steps.empty()) r.fail("lemmas must precede the main steps");
      if (line.back() != ':') r.fail("expected 'lemma <name>:'");
      std::string_view name = trim(line.substr(6, line.size() - 7));
      if (!is_name(name)) r.fail("bad lemma name");
      if (file.proof.find_lemma(name)) r.fail("lemma " + std::string(name) + " defined twice");
      file.proof.lemmas.push_back({std::string(name), {}});
      open = &file.proof.lemmas.back();
      continue;
    }
    if (line == "end") {
      if (!open) r.fail("'end' outside a lemma");
      if (open->steps.empty()) r.fail("empty lemma");
      open = nullptr;
      continue;
    }
    std::vector<Step>& steps = open ? open->steps : file.proof.steps;
    steps.push_back(r.step(line, steps.size() + 1));
  }
  if (open) r.fail("unterminated lemma " + open->name);
  if (file.proof.steps.empty()) r.fail("no steps");
  return file;
}

}  // namespace dichotomy
