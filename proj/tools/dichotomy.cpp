// Command-line front end. Exit codes: 0 success, 1 reject or violation,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "CLI11.hpp"
#include "dichotomy/calculus/enumerator.hpp"
#include "dichotomy/calculus/proof_io.hpp"
#include "dichotomy/cli/demo.hpp"
#include "dichotomy/enumvm/fixed_point.hpp"
#include "dichotomy/machines/machine.hpp"
#include "dichotomy/machines/slash.hpp"
#include "dichotomy/selfref/diagonal.hpp"
#include "dichotomy/selfref/refutation.hpp"
#include "dichotomy/syntax/codec.hpp"
#include "dichotomy/syntax/parser.hpp"
#include "dichotomy/syntax/printer.hpp"

using namespace dichotomy;

namespace {

constexpr std::uint64_t kEnumBudget = 10000;
constexpr std::uint64_t kVmBudget = 100000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

Natural natural_flag(const std::string& text, const char* flag) {
  try {
    return parse_natural(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + " expects a decimal natural, got '" + text + "'");
  }
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

struct RegistryFlag {
  std::string path;
  std::unique_ptr<vm::Registry> loaded;

  vm::Registry& get() {
    if (path.empty()) return standard_registry();
    if (!loaded) {
      loaded = std::make_unique<vm::Registry>();
      loaded->replay(read_file(path));
    }
    return *loaded;
  }
};

std::string expression_text(const Expression& x) {
  return std::visit([](const auto& v) { return to_string(v); }, x);
}

Expression parse_expression(const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& formula_error) {
    try {
      return parse_term(text);
    } catch (const ParseError&) {
      throw formula_error;
    }
  }
}

int cmd_check(const std::string& file, const std::string& theory, const std::optional<std::string>& e) {
  ProofFile pf;
  try {
    pf = read_proof(read_file(file));
  } catch (const ProofFormatError& err) {
    std::cerr << "Reject: line " << err.line() << ": " << err.what() << "\n";
    return 1;
  }
  TheorySpec spec;
  if (!theory.empty()) {
    Natural idx = e ? natural_flag(*e, "--e") : (pf.theory ? pf.theory->e() : Natural(0));
    spec = TheorySpec::parse(theory, idx);
  } else if (pf.theory) {
    if (e) throw UsageError("--e needs --theory");
    spec = *pf.theory;
  } else {
    throw UsageError("no theory: pass --theory or add a theory header");
  }
  CheckResult r = check_proof(spec, pf.proof);
  if (r) {
    std::cout << "Accept\n";
    return 0;
  }
  std::cerr << "Reject at step " << r.step << ": " << r.reason << "\n";
  return 1;
}

int cmd_enum(const std::string& theory, const std::string& e, std::uint64_t budget,
             const std::optional<std::size_t>& proof_index) {
  TheorySpec spec = TheorySpec::parse(theory, natural_flag(e, "--e"));
  ConsequenceEnumerator en(spec);
  en.run_to(budget);
  if (proof_index) {
    if (*proof_index >= en.size())
      throw UsageError("--proof " + std::to_string(*proof_index) + " is past the " + std::to_string(en.size()) +
                       " elements found");
    std::cout << write_proof(en.proof_of(*proof_index), spec);
    return 0;
  }
  for (std::size_t i = 0; i < en.size(); ++i) std::cout << en.code_at(i) << '\t' << to_string(en.at(i)) << '\n';
  return 0;
}

int cmd_slash_eval(const std::string& text, const std::string& theory, const std::string& e, std::uint64_t budget,
                   std::uint64_t vm_budget) {
  Formula phi = parse_formula(text);
  if (!phi.is_closed()) throw UsageError("slash-eval needs a sentence");
  EvalOptions o;
  o.vm_budget = vm_budget;
  SlashModel m(TheorySpec::parse(theory, natural_flag(e, "--e")), budget, o);
  std::cout << to_string(m.eval(phi)) << '\n';
  return 0;
}

int cmd_diag(const std::string& e, const std::string& templ, const std::string& out) {
  auto build = [&] {
    if (templ.empty()) return build_diagonal(natural_flag(e, "--e"));
    Formula t = parse_formula(templ);
    for (VarIndex v : t.free_vars())
      if (v != 0) throw UsageError("the template may only have x0 free");
    return diagonal_general(t);
  };
  DiagonalResult d = build();
  std::string text = "# theta: " + to_string(d.theta) + "\n# phi: " + to_string(d.phi) + "\n" +
                     write_proof(d.equivProof, TheorySpec::pa_comp());
  write_output(out, text);
  return 0;
}

int cmd_fixpoint(RegistryFlag& registry, const std::string& templ, bool classical, const std::string& save,
                 std::size_t show, std::uint64_t vm_budget) {
  vm::Registry& reg = registry.get();
  vm::Template f = templ.empty() ? vm::consequences_transformer() : vm::parse_prog(templ);
  std::optional<Natural> e;
  if (classical) {
    e = vm::fixed_point_classical(reg, f);
  } else {
    vm::Prog target = vm::instantiate(f, vm::Expr::self());
    for (std::size_t k = 0; k < reg.size() && !e; ++k) {
      Natural i(static_cast<unsigned long>(2 * k));
      if (reg.program(i) == target) e = i;
    }
    if (!e) e = vm::fixed_point(reg, f);
  }
  std::cout << *e << '\n';
  if (show > 0) {
    vm::RunResult r = reg.run(*e, vm_budget);
    std::unordered_set<Natural, NaturalHash> seen;
    for (std::size_t i = 0; seen.size() < show && i < r.elements.size(); ++i) {
      if (!seen.insert(r.elements[i]).second) continue;
      std::cout << r.elements[i];
      if (auto phi = try_decode_formula(r.elements[i])) std::cout << '\t' << to_string(*phi);
      std::cout << '\n';
    }
  }
  if (!save.empty()) write_output(save, reg.transcript());
  return 0;
}

Machine named_machine(const std::string& name, RegistryFlag& registry) {
  std::optional<Machine> m = machine_by_name(name, registry.get());
  if (!m) {
    std::string names;
    for (const std::string& n : machine_names()) names += (names.empty() ? "" : ", ") + n;
    throw UsageError("unknown machine '" + name + "'; one of " + names);
  }
  return *m;
}

int cmd_machine_enum(const std::string& name, RegistryFlag& registry, std::size_t budget) {
  Machine m = named_machine(name, registry);
  for (const Formula& f : m.knowledge(budget)) std::cout << encode(f) << '\t' << to_string(f) << '\n';
  return 0;
}

int cmd_audit(const std::string& name, RegistryFlag& registry, std::size_t budget) {
  Machine m = named_machine(name, registry);
  std::vector<Violation> v = audit_factivity(m, budget);
  for (const Violation& x : v)
    std::cout << x.code << '\t' << sanitize(to_string(x.formula)) << '\t' << to_string(x.verdict) << '\n';
  std::cerr << "audited " << budget << " entries of " << m.name() << ": " << v.size() << " violations\n";
  return v.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowing machines: formulas, proofs, registries and audits"};
  app.require_subcommand(1);
  int status = 0;

  std::string text, file, theory, e = "0", out, templ, save, machine;
  std::optional<std::string> e_opt;
  std::uint64_t budget = kEnumBudget, vm_budget = kVmBudget, seed = 0;
  std::optional<std::size_t> proof_index;
  std::size_t show = 0, count = 0;
  bool classical = false;
  RegistryFlag registry;

  auto* parse = app.add_subcommand("parse", "Print a formula or term in canonical form");
  parse->add_option("text", text, "Formula or term")->required();
  parse->callback([&] { std::cout << expression_text(parse_expression(text)) << '\n'; });

  auto* code = app.add_subcommand("code", "Print the code of a formula or term");
  code->add_option("text", text, "Formula or term")->required();
  code->callback([&] {
    std::cout << std::visit([](const auto& v) { return encode(v); }, parse_expression(text)) << '\n';
  });

  auto* decode_cmd = app.add_subcommand("decode", "Print the formula or term with a given code");
  decode_cmd->add_option("code", text, "Decimal code")->required();
  decode_cmd->callback([&] {
    try {
      std::cout << expression_text(decode(natural_flag(text, "code"))) << '\n';
    } catch (const DecodeError& err) {
      std::cerr << "not a code: " << err.what() << '\n';
      status = 1;
    }
  });

  auto* check = app.add_subcommand("check", "Check a proof file");
  check->add_option("file", file, "Proof file")->required();
  check->add_option("--theory", theory, "Theory expression; overrides the file header");
  check->add_option("--e", e_opt, "Index parameter of the theory");
  check->callback([&] { status = cmd_check(file, theory, e_opt); });

  auto* en = app.add_subcommand("enum", "Enumerate the consequences of a theory");
  en->add_option("--theory", theory, "Theory expression")->required();
  en->add_option("--e", e, "Index parameter of the theory");
  en->add_option("--budget", budget, "Enumeration steps")->capture_default_str();
  en->add_option("--proof", proof_index, "Print a proof of the element at this stream index instead");
  en->callback([&] { status = cmd_enum(theory, e, budget, proof_index); });

  auto* slash = app.add_subcommand("slash-eval", "Three-valued truth of a sentence in the slash model");
  slash->add_option("formula", text, "Sentence")->required();
  slash->add_option("--theory", theory, "Theory expression (default sigma_slash)");
  slash->add_option("--e", e, "Index parameter of the theory");
  slash->add_option("--budget", budget, "Stream elements known to the model")->capture_default_str();
  slash->add_option("--vm-budget", vm_budget, "Registry steps for membership atoms")->capture_default_str();
  slash->callback([&] {
    status = cmd_slash_eval(text, theory.empty() ? "sigma_slash" : theory, e, budget, vm_budget);
  });

  auto* diag = app.add_subcommand("diag", "Emit the diagonal sentence for e with its equivalence proof");
  diag->add_option("--e", e, "Index in the template ~In(x0, num e)");
  diag->add_option("--template", templ, "Custom template with x0 free");
  diag->add_option("-o,--output", out, "Output file (default standard output)");
  diag->callback([&] { status = cmd_diag(e, templ, out); });

  auto* fix = app.add_subcommand("fixpoint", "Allocate or find a fixed point of a transformer template");
  fix->add_option("--registry", registry.path, "Registry transcript to start from");
  fix->add_option("--template", templ, "Program template with Param (default: consequences of sigma_prime_e)");
  fix->add_flag("--classical", classical, "Use the s-m-n construction");
  fix->add_option("--save", save, "Write the registry transcript here");
  fix->add_option("--show", show, "Print this many distinct elements of the fixed point's set");
  fix->add_option("--vm-budget", vm_budget, "Registry steps for --show")->capture_default_str();
  fix->callback([&] { status = cmd_fixpoint(registry, templ, classical, save, show, vm_budget); });

  auto* refute = app.add_subcommand("refute", "Emit the refutation of sigma_e");
  refute->add_option("--e", e, "Index");
  refute->add_option("-o,--output", out, "Output file (default standard output)");
  refute->callback([&] {
    Natural idx = natural_flag(e, "--e");
    write_output(out, write_proof(build_refutation(idx), TheorySpec::sigma_e(idx)));
  });

  auto* menum = app.add_subcommand("machine-enum", "List what a machine knows, with codes");
  menum->alias("enumerate");
  menum->add_option("machine,-m,--machine", machine, "know-nothing, know-all, pa, slash or self-knowing")
      ->required();
  menum->add_option("--budget", count, "Number of entries (default 10000)");
  menum->add_option("--registry", registry.path, "Registry transcript");
  menum->callback([&] { status = cmd_machine_enum(machine, registry, count ? count : kEnumBudget); });

  auto* audit = app.add_subcommand("audit", "Report entries of a machine that are false");
  audit->add_option("machine,-m,--machine", machine, "Machine name")->required();
  audit->add_option("--budget", count, "Number of entries (default 500)");
  audit->add_option("--registry", registry.path, "Registry transcript");
  audit->callback([&] { status = cmd_audit(machine, registry, count ? count : kDefaultAuditBudget); });

  auto* demo = app.add_subcommand("demo-dichotomy", "Verify both horns of the dichotomy");
  demo->add_option("--budget", budget, "Slash stream elements")->capture_default_str();
  demo->add_option("--vm-budget", vm_budget, "Registry steps")->capture_default_str();
  demo->add_option("--seed", seed, "Seed for sample selection")->capture_default_str();
  demo->add_option("--registry", registry.path, "Registry transcript");
  demo->callback([&] {
    DemoOptions o;
    o.budget = budget;
    o.vm_budget = vm_budget;
    o.seed = seed;
    DemoReport r = demo_dichotomy(o, registry.get());
    std::cout << r.text;
    status = r.verified ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 2;
  } catch (const ParseError& err) {
    std::cerr << "parse error at " << err.position() << ": " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return status;
}
