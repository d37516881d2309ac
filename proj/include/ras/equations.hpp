#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ras/surface.hpp"

namespace ras {

enum class EquationKind {
  SymmetricElliptic,
  SymmetricQDifference,
  SymmetricOrdinary,
  NonsymmetricQDifference,
  NonsymmetricOrdinary,
  Differential,
  Unclassified
};
std::string to_string(EquationKind k);

// Read off the kind of equation from the horizontal part of the anticanonical
// curve and the Pic^0 type implied by its curve tag.
EquationKind anticanonical_kind(const SurfaceData& X);

struct SingularPoint {
  // Exceptional indices sharing one restriction, in index order.
  std::vector<std::size_t> indices;
  std::vector<Integer> partition;  // nonincreasing
};

struct EquationReport {
  Integer order;
  std::vector<SingularPoint> singularities;
  bool rigid = false;
  EquationKind kind = EquationKind::Unclassified;
  Integer twist_degree;
  bool trivial = false;
  // Set when some point's coefficients had to be sorted into a partition.
  bool reordered = false;
  std::vector<std::string> warnings;
};

EquationReport interpret(const SurfaceData& X, const DivisorClass& D);

// Shift every basis image by (v.b) q.
SurfaceData twist_action(const SurfaceData& X, const DivisorClass& v, const AbGroup::Element& q);

std::pair<DivisorClass, Integer> duality_action(const DivisorClass& D, const Integer& x);

}  // namespace ras
