#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ras/surface.hpp"

namespace ras {

// Full orbit of D under the finite Weyl group generated by the simple
// reflections of its lattice (m <= 7).
std::vector<DivisorClass> weyl_orbit(const DivisorClass& D);

// A stratum is a combinatorial type of anticanonical curve together with one
// of the analytic types it admits (node or cusp, tangency, concurrency).
struct StratumDescriptor {
  // Components sorted by (class, multiplicity); equal entries are distinct curves.
  std::vector<Component> components;
  CurveTypeTag curve_type;
  std::string key;
  std::size_t orbit = 0;
  // Orbit of the underlying combinatorial type.
  std::size_t combinatorial_orbit = 0;
};

struct CensusOptions {
  bool triple_points = true;
  // When set, one JSON object per generation step is written here.
  std::ostream* audit = nullptr;
};

struct CensusResult {
  std::vector<StratumDescriptor> strata;
  std::size_t orbit_count = 0;
  std::size_t combinatorial_strata = 0;
  std::size_t combinatorial_orbit_count = 0;
  std::vector<std::string> closure_defects;
  std::map<std::string, std::uint64_t> stats;
  std::string digest;
};

// Degenerations of the anticanonical curve on six-point blowups of F_0 on
// which 2s + f - e_1 - ... - e_6 can be a -2-curve.
CensusResult enumerate_rigid_second_order(const CensusOptions& options = {});

// The target D of the census, and the surface instantiating a stratum with
// the single kernel relation that makes D eligible.
DivisorClass rigid_second_order_class();
SurfaceData instantiate_stratum(const StratumDescriptor& s);

}  // namespace ras
