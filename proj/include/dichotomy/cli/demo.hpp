#pragma once

#include <cstdint>
#include <string>

#include "dichotomy/enumvm/registry.hpp"

namespace dichotomy {

struct DemoOptions {
  std::uint64_t budget = 10000;      // consequence stream elements
  std::uint64_t vm_budget = 100000;  // registry steps
  std::uint64_t seed = 0;
  std::size_t prefix = 50;
  std::size_t samples = 10;
};

struct DemoReport {
  std::string text;
  bool verified = false;
};

/// Builds the self-knowing machine and checks its prefix against W_e*, checks
/// the refutation for e*, and lists checked slash knowledge-of-factivity
/// samples. The last line is the verdict.
DemoReport demo_dichotomy(const DemoOptions& options, vm::Registry& reg);

}  // namespace dichotomy
