#include "dichotomy/syntax/code_order.hpp"

#include <deque>
#include <mutex>

#include "dichotomy/syntax/codec.hpp"

namespace dichotomy {

namespace {

// Codes on the Cantor diagonal w are w(w+1)/2 + b for b = 0..w, increasing in
// b, with tag w - b. Only tags 0..12 can be valid, so each diagonal has at
// most 13 candidates.
class CodeOrder {
 public:
  static CodeOrder& instance() {
    static CodeOrder order;
    return order;
  }

  std::pair<Formula, Natural> formula(std::size_t i) {
    std::lock_guard lock(mutex_);
    while (formulas_.size() <= i) advance();
    return formulas_[i];
  }

  Term term(std::size_t i) {
    std::lock_guard lock(mutex_);
    while (terms_.size() <= i) advance();
    return terms_[i];
  }

 private:
  void advance() {
    const std::uint64_t w = diagonal_;
    const std::uint64_t first = w > 12 ? w - 12 : 0;
    const Natural base = Natural(static_cast<unsigned long>(w)) * Natural(static_cast<unsigned long>(w + 1)) / 2;
    for (std::uint64_t b = first; b <= w; ++b) {
      const std::uint64_t tag = w - b;
      const Natural code = base + Natural(static_cast<unsigned long>(b));
      const bool formula_tag = tag >= 6 && tag <= 11;
      if (formula_tag) {
        if (auto f = try_decode_formula(code)) formulas_.emplace_back(*f, code);
      } else if (auto t = try_decode_term(code)) {
        terms_.push_back(*t);
      }
    }
    ++diagonal_;
  }

  std::mutex mutex_;
  std::uint64_t diagonal_ = 0;
  std::deque<std::pair<Formula, Natural>> formulas_;
  std::deque<Term> terms_;
};

}  // namespace

Formula formula_at(std::size_t i) { return CodeOrder::instance().formula(i).first; }
Natural formula_code_at(std::size_t i) { return CodeOrder::instance().formula(i).second; }
Term term_at(std::size_t i) { return CodeOrder::instance().term(i); }

}  // namespace dichotomy
