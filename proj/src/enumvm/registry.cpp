#include "dichotomy/enumvm/registry.hpp"

#include <optional>
#include <sstream>
#include <unordered_map>

#include "dichotomy/calculus/enumerator.hpp"

namespace dichotomy::vm {

Natural smn_index(const Natural& e, const Natural& n) { return 2 * cantor_pair(e, n) + 1; }

struct Registry::Env {
  Natural self;
  std::optional<Natural> param;
  Natural limit;  // largest visible entry index
};

class Registry::Cursor {
 public:
  virtual ~Cursor() = default;
  virtual std::optional<Natural> step() = 0;
  bool exhausted() const { return exhausted_; }

 protected:
  bool exhausted_ = false;
};

namespace {

using CursorPtr = std::unique_ptr<Registry::Cursor>;

std::optional<Natural> eval(const Expr& e, const Registry::Env& env) {
  switch (e.kind) {
    case Expr::Kind::Lit: return e.value;
    case Expr::Kind::Self: return env.self;
    case Expr::Kind::Param: return env.param;
    case Expr::Kind::Smn:
    case Expr::Kind::Pair: {
      auto a = eval(*e.a, env), b = eval(*e.b, env);
      if (!a || !b) return std::nullopt;
      return e.kind == Expr::Kind::Smn ? smn_index(*a, *b) : cantor_pair(*a, *b);
    }
  }
  return std::nullopt;
}

class Inert final : public Registry::Cursor {
 public:
  explicit Inert(bool finished) { exhausted_ = finished; }
  std::optional<Natural> step() override { return std::nullopt; }
};

class EmitCursor final : public Registry::Cursor {
 public:
  explicit EmitCursor(std::vector<Natural> items) : items_(std::move(items)) { exhausted_ = items_.empty(); }
  std::optional<Natural> step() override {
    if (pos_ >= items_.size()) return std::nullopt;
    Natural out = items_[pos_++];
    exhausted_ = pos_ >= items_.size();
    return out;
  }

 private:
  std::vector<Natural> items_;
  std::size_t pos_ = 0;
};

class InterleaveCursor final : public Registry::Cursor {
 public:
  InterleaveCursor(CursorPtr a, CursorPtr b) : kids_{std::move(a), std::move(b)} { update(); }
  std::optional<Natural> step() override {
    if (exhausted_) return std::nullopt;
    if (kids_[turn_]->exhausted()) turn_ ^= 1;
    auto out = kids_[turn_]->step();
    turn_ ^= 1;
    update();
    return out;
  }

 private:
  void update() { exhausted_ = kids_[0]->exhausted() && kids_[1]->exhausted(); }
  CursorPtr kids_[2];
  int turn_ = 0;
};

class MapPairCursor final : public Registry::Cursor {
 public:
  MapPairCursor(Natural key, CursorPtr kid) : key_(std::move(key)), kid_(std::move(kid)) {
    exhausted_ = kid_->exhausted();
  }
  std::optional<Natural> step() override {
    auto m = kid_->step();
    exhausted_ = kid_->exhausted();
    if (!m) return std::nullopt;
    return cantor_pair(key_, *m);
  }

 private:
  Natural key_;
  CursorPtr kid_;
};

class SectionCursor final : public Registry::Cursor {
 public:
  SectionCursor(Natural key, CursorPtr kid) : key_(std::move(key)), kid_(std::move(kid)) {
    exhausted_ = kid_->exhausted();
  }
  std::optional<Natural> step() override {
    auto z = kid_->step();
    exhausted_ = kid_->exhausted();
    if (!z) return std::nullopt;
    auto [n, m] = cantor_unpair(*z);
    if (n != key_) return std::nullopt;
    return m;
  }

 private:
  Natural key_;
  CursorPtr kid_;
};

class ConsequencesCursor final : public Registry::Cursor {
 public:
  explicit ConsequencesCursor(TheorySpec theory) : en_(std::move(theory)) {}
  std::optional<Natural> step() override {
    auto i = en_.step();
    if (!i) return std::nullopt;
    return en_.code_at(*i);
  }

 private:
  ConsequenceEnumerator en_;
};

}  // namespace

// The child is created by the first step, which emits nothing; a step never
// descends through more than one new level.
class RunIndexCursor final : public Registry::Cursor {
 public:
  RunIndexCursor(const Registry& reg, Natural index, Natural limit, std::size_t depth)
      : reg_(reg), index_(std::move(index)), limit_(std::move(limit)), depth_(depth) {}
  std::optional<Natural> step() override {
    if (!kid_) {
      kid_ = reg_.resolve(index_, limit_, depth_ + 1);
      exhausted_ = kid_->exhausted();
      return std::nullopt;
    }
    auto out = kid_->step();
    exhausted_ = kid_->exhausted();
    return out;
  }

 private:
  const Registry& reg_;
  Natural index_, limit_;
  std::size_t depth_;
  CursorPtr kid_;
};

// Round robin over the members started so far; reaching the end of the
// rotation starts member u = count.
class FamilyCursor final : public Registry::Cursor {
 public:
  FamilyCursor(const Registry& reg, const Prog& body, Registry::Env env, std::size_t depth)
      : reg_(reg), body_(body), env_(std::move(env)), depth_(depth) {}
  std::optional<Natural> step() override {
    while (pos_ < kids_.size() && kids_[pos_]->exhausted()) ++pos_;
    if (pos_ >= kids_.size()) {
      Registry::Env env = env_;
      env.param = Natural(static_cast<unsigned long>(kids_.size()));
      kids_.push_back(reg_.make_cursor(body_, env, depth_ + 1));
      pos_ = 0;
      return std::nullopt;
    }
    std::size_t u = pos_++;
    auto m = kids_[u]->step();
    if (!m) return std::nullopt;
    return cantor_pair(Natural(static_cast<unsigned long>(u)), *m);
  }

 private:
  const Registry& reg_;
  const Prog& body_;
  Registry::Env env_;
  std::size_t depth_;
  std::vector<CursorPtr> kids_;
  std::size_t pos_ = 0;
};

std::unique_ptr<Registry::Cursor> Registry::make_cursor(const Prog& p, const Env& env, std::size_t depth) const {
  if (depth > kMaxDepth) return std::make_unique<Inert>(false);
  auto key = [&]() { return eval(p.exprs.at(0), env); };
  switch (p.kind) {
    case Prog::Kind::Emit: {
      std::vector<Natural> items;
      for (const Expr& e : p.exprs)
        if (auto v = eval(e, env)) items.push_back(*v);
      return std::make_unique<EmitCursor>(std::move(items));
    }
    case Prog::Kind::Interleave:
      return std::make_unique<InterleaveCursor>(make_cursor(p.kid(0), env, depth + 1),
                                                make_cursor(p.kid(1), env, depth + 1));
    case Prog::Kind::MapPair:
    case Prog::Kind::Section: {
      auto n = key();
      if (!n) return std::make_unique<Inert>(true);
      auto kid = make_cursor(p.kid(0), env, depth + 1);
      if (p.kind == Prog::Kind::MapPair) return std::make_unique<MapPairCursor>(*n, std::move(kid));
      return std::make_unique<SectionCursor>(*n, std::move(kid));
    }
    case Prog::Kind::RunIndex: {
      auto i = key();
      if (!i) return std::make_unique<Inert>(true);
      return std::make_unique<RunIndexCursor>(*this, *i, env.limit, depth);
    }
    case Prog::Kind::EnumConsequences: {
      auto c = key();
      if (!c) return std::make_unique<Inert>(true);
      try {
        return std::make_unique<ConsequencesCursor>(TheorySpec::from_code(*c));
      } catch (const std::exception&) {
        return std::make_unique<Inert>(true);
      }
    }
    case Prog::Kind::Family:
      return std::make_unique<FamilyCursor>(*this, p.kid(0), env, depth);
  }
  return std::make_unique<Inert>(true);
}

std::unique_ptr<Registry::Cursor> Registry::resolve(const Natural& index, const Natural& limit,
                                                    std::size_t depth) const {
  if (depth > kMaxDepth) return std::make_unique<Inert>(false);
  if (index % 2 == 0) {
    if (index > limit || index / 2 >= entries_.size()) return std::make_unique<Inert>(true);
    auto k = to_u64(index / 2);
    return make_cursor(entries_[*k], Env{index, std::nullopt, index}, depth);
  }
  auto [e, n] = cantor_unpair((index - 1) / 2);
  auto inner = std::make_unique<RunIndexCursor>(*this, e, limit, depth);
  return std::make_unique<SectionCursor>(n, std::move(inner));
}

struct Registry::Run {
  CursorPtr root;
  std::uint64_t steps = 0;
  std::vector<Natural> elements;
  std::vector<std::uint64_t> emitted_at;  // step count after each emission
  std::unordered_map<Natural, std::uint64_t, NaturalHash> first;
  std::optional<std::uint64_t> exhausted_at;

  void advance(std::uint64_t budget) {
    while (steps < budget && !exhausted_at) {
      auto out = root->step();
      ++steps;
      if (out) {
        elements.push_back(*out);
        emitted_at.push_back(steps);
        first.try_emplace(*out, steps);
      }
      if (root->exhausted()) exhausted_at = steps;
    }
  }
};

Registry::Registry() = default;
Registry::~Registry() = default;

Natural Registry::alloc(const Prog& p) {
  if (has_free_param(p)) throw std::invalid_argument("program has a free Param: " + to_sexpr(p));
  std::lock_guard lock(mu_);
  entries_.push_back(p);
  return Natural(static_cast<unsigned long>(2 * (entries_.size() - 1)));
}

std::size_t Registry::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

bool Registry::allocated(const Natural& index) const {
  std::lock_guard lock(mu_);
  Natural i = index;
  while (i % 2 == 1) i = cantor_unpair((i - 1) / 2).first;
  return i / 2 < entries_.size();
}

Prog Registry::program(const Natural& index) const {
  if (!allocated(index)) throw UnallocatedIndex("unallocated index " + index.get_str());
  std::lock_guard lock(mu_);
  if (index % 2 == 0) return entries_[*to_u64(index / 2)];
  auto [e, n] = cantor_unpair((index - 1) / 2);
  return Prog::section(Expr::lit(n), Prog::run_index(Expr::lit(e)));
}

Natural Registry::smn(const Natural& e, const Natural& n) const {
  if (!allocated(e)) throw UnallocatedIndex("unallocated index " + e.get_str());
  return smn_index(e, n);
}

Registry::Run& Registry::run_locked(const Natural& index, std::uint64_t budget) {
  if (!allocated(index)) throw UnallocatedIndex("unallocated index " + index.get_str());
  auto it = runs_.find(index);
  if (it == runs_.end()) {
    auto run = std::make_unique<Run>();
    Natural base = index;
    while (base % 2 == 1) base = cantor_unpair((base - 1) / 2).first;
    run->root = resolve(index, base, 0);
    if (run->root->exhausted()) run->exhausted_at = 0;
    it = runs_.emplace(index, std::move(run)).first;
  }
  it->second->advance(budget);
  return *it->second;
}

RunResult Registry::run(const Natural& index, std::uint64_t budget) {
  std::lock_guard lock(mu_);
  Run& r = run_locked(index, budget);
  RunResult out;
  for (std::size_t i = 0; i < r.elements.size() && r.emitted_at[i] <= budget; ++i) out.elements.push_back(r.elements[i]);
  out.exhausted = r.exhausted_at && *r.exhausted_at <= budget;
  return out;
}

std::optional<std::uint64_t> Registry::first_emission(const Natural& index, const Natural& x, std::uint64_t budget) {
  std::lock_guard lock(mu_);
  Run& r = run_locked(index, budget);
  auto it = r.first.find(x);
  if (it == r.first.end() || it->second > budget) return std::nullopt;
  return it->second;
}

Membership Registry::member(const Natural& index, const Natural& x, std::uint64_t budget) {
  std::lock_guard lock(mu_);
  if (!allocated(index)) return Membership::Unknown;
  if (first_emission(index, x, budget)) return Membership::Member;
  Run& r = *runs_.at(index);
  if (r.exhausted_at && *r.exhausted_at <= budget) return Membership::NonMember;
  return Membership::Unknown;
}

std::string Registry::transcript() const {
  std::lock_guard lock(mu_);
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out += "alloc " + std::to_string(2 * k) + " " + to_sexpr(entries_[k]) + "\n";
  return out;
}

void Registry::replay(std::string_view transcript) {
  std::istringstream in{std::string(transcript)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream words(line.substr(start));
    std::string verb, index;
    words >> verb >> index;
    std::string rest;
    std::getline(words, rest);
    if (verb != "alloc") throw std::invalid_argument("transcript line " + std::to_string(lineno) + ": expected alloc");
    Natural expected;
    try {
      expected = parse_natural(index);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("transcript line " + std::to_string(lineno) + ": bad index");
    }
    Prog p;
    try {
      p = parse_prog(rest);
    } catch (const ProgParseError& e) {
      throw std::invalid_argument("transcript line " + std::to_string(lineno) + ": " + e.what());
    }
    Natural got = alloc(p);
    if (got != expected)
      throw std::invalid_argument("transcript line " + std::to_string(lineno) + ": index " + index +
                                  " replayed as " + got.get_str());
  }
}

}  // namespace dichotomy::vm
