#pragma once

#include <stdexcept>
#include <string>

namespace pauligraph {

// A computation was refused because it would exceed a configured budget
// (vertex count, clique count, refinement size, oracle dimension).
// Results are all-or-nothing: nothing partial escapes.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed: a claimed identity did not hold on the
// computed data (e.g. a clique without a matching isotropic line).
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pauligraph
