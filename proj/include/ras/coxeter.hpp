#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ras/picard.hpp"

namespace ras {

using SimpleRootIndex = std::size_t;

// Letters act right to left: {a, b, c} means reflect in c first.
struct ReflectionWord {
  std::vector<SimpleRootIndex> letters;

  static ReflectionWord from_steps(const std::vector<SimpleRootIndex>& steps);
  // Letters in the order they are applied.
  std::vector<SimpleRootIndex> steps() const;
  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const ReflectionWord&, const ReflectionWord&) = default;
};

std::size_t simple_root_count(const LatticeContext& ctx);
DivisorClass simple_root(const LatticeContext& ctx, SimpleRootIndex i);
std::vector<DivisorClass> simple_roots(const LatticeContext& ctx);

// D + (D.sigma) sigma
DivisorClass reflect(const DivisorClass& D, const DivisorClass& sigma);
DivisorClass apply_word(const DivisorClass& D, const ReflectionWord& w);

// True when the two simple roots are joined in the Dynkin diagram.
bool roots_adjacent(const LatticeContext& ctx, SimpleRootIndex i, SimpleRootIndex j);

// Coefficients of D over (sigma_0, ..., sigma_m, e_m). Needs m >= 2; the basis
// is unimodular so the coefficients are integers.
std::vector<Integer> expand_in_root_basis(const DivisorClass& D);

// Every real root of the finite Weyl group, m <= 7.
std::vector<DivisorClass> root_orbit(std::size_t m, Parity parity);

enum class RootKind { RealPositive, RealNegative, Imaginary, NotARoot };
std::string to_string(RootKind k);

struct RootClassification {
  RootKind kind = RootKind::NotARoot;
  // Reduction walk that decided the answer, run on -D when negated is set.
  ReflectionWord witness;
  bool negated = false;
};

RootClassification classify_root(const DivisorClass& D, std::size_t max_steps = 0);

// Default iteration budget for walks on D.
std::size_t default_step_budget(const DivisorClass& D);

}  // namespace ras
