#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dichotomy/calculus/proof.hpp"

namespace dichotomy {

class ProofFormatError : public std::runtime_error {
 public:
  ProofFormatError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ProofFile {
  std::optional<TheorySpec> theory;
  Proof proof;
};

/// Text form:
///   theory: <theory expression> [e=<n>]
///   lemma <name>:
///   1. <formula> ; <justification>
///   end
///   1. <formula> ; <justification>
/// Justifications: prop-ax:1|2|3, q-inst, q-distr, eq-refl, eq-subst, comp,
/// kt:<lemma>, ax:<Schema>[:<e or lemma>], mp:<premise>,<implication>,
/// gen:<step>,x<n>. Step numbers are one-based. '#' starts a comment line.
std::string write_proof(const Proof& proof, const TheorySpec& theory);
ProofFile read_proof(std::string_view text);

std::string justification_text(const Justification& j);

}  // namespace dichotomy
