#include "dichotomy/machines/slash.hpp"

namespace dichotomy {

SlashModel::SlashModel(TheorySpec sigma, std::uint64_t budget)
    : SlashModel(std::move(sigma), budget, EvalOptions::from_budget(budget)) {}

SlashModel::SlashModel(TheorySpec sigma, std::uint64_t budget, EvalOptions options)
    : en_(std::move(sigma)), budget_(budget), options_(options) {}

void SlashModel::fill() {
  if (filled_) return;
  en_.fill(budget_, 64 * budget_ + 4096);
  filled_ = true;
}

std::optional<std::size_t> SlashModel::stage(const Formula& psi) {
  fill();
  auto i = en_.position(psi);
  if (!i || *i >= budget_) return std::nullopt;
  return i;
}

bool SlashModel::provable(const Formula& psi) { return stage(psi).has_value(); }

TruthValue3 SlashModel::known(const Formula& psi) {
  if (auto it = memo_.find(psi); it != memo_.end()) return it->second;
  TruthValue3 truth = eval(universal_closure(psi));
  TruthValue3 out = t_and(truth, provable(psi) ? TruthValue3::True : TruthValue3::Unknown);
  memo_.emplace(psi, out);
  return out;
}

TruthValue3 SlashModel::eval(const Formula& phi) {
  return std_eval(phi, [this](const Formula& psi) { return known(psi); }, options_);
}

TruthValue3 slash_eval(const TheorySpec& sigma, const Formula& phi, std::uint64_t budget) {
  return SlashModel(sigma, budget).eval(phi);
}

}  // namespace dichotomy
