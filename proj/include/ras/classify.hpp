#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ras/coxeter.hpp"
#include "ras/frame.hpp"
#include "ras/surface.hpp"

namespace ras {

struct CurveTest {
  bool accepted = false;
  ReflectionWord witness;
  std::string reason;
};

CurveTest is_minus_one_class(const SurfaceData& X, const DivisorClass& E, const Limits& limits = {});
CurveTest is_minus_two_class(const SurfaceData& X, const DivisorClass& D, const Limits& limits = {});

enum class ChamberFailure { None, EffectiveRoot, NegativeFiber, NegativeLastExceptional };
std::string to_string(ChamberFailure f);

struct ChamberResult {
  bool success = false;
  ChamberFailure failure = ChamberFailure::None;
  // Coordinates of D in the final frame.
  std::optional<DivisorClass> chamber_form;
  ReflectionWord word;
  Frame frame;
  std::string detail;
};

ChamberResult reduce_to_chamber(const SurfaceData& X, const DivisorClass& D, const Limits& limits = {});
// Same walk from a chosen starting frame.
ChamberResult reduce_to_chamber_from(const SurfaceData& X, const DivisorClass& D, Frame start,
                                     const Limits& limits = {});

struct NefResult {
  bool nef = false;
  std::string reason;
  ReflectionWord witness;
  std::optional<DivisorClass> chamber_form;
};

NefResult is_nef(const SurfaceData& X, const DivisorClass& D, const Limits& limits = {});

enum class PartKind { MinusDCurve, Anticanonical, Ruling };
std::string to_string(PartKind k);

struct DecompositionPart {
  DivisorClass cls;
  Integer coefficient;
  PartKind kind;
  Integer self_intersection_negated;  // d for a -d-curve, 0 otherwise
};

struct EffectiveDecomposition {
  std::vector<DecompositionPart> parts;
  DivisorClass total(const LatticeContext& ctx) const;
  void add(const DivisorClass& cls, const Integer& coefficient, PartKind kind, const Integer& d);
};

struct EffectivityResult {
  bool effective = false;
  EffectiveDecomposition decomposition;
  ReflectionWord witness;
  std::string reason;
  // Nef part left once fixed curves are stripped, with the frame it is
  // chambered in. Present only for effective classes when m >= 2.
  std::optional<DivisorClass> residual;
  std::optional<Frame> frame;
};

EffectivityResult is_effective(const SurfaceData& X, const DivisorClass& D, const Limits& limits = {});

// D must be nef and in the fundamental chamber of the standard frame.
EffectiveDecomposition decompose_nef(const SurfaceData& X, const DivisorClass& D, const Limits& limits = {});

Integer h0(const SurfaceData& X, const DivisorClass& D, const Limits& limits = {});

enum class PencilKind { FiberClass, SevenPointPencil, QuasiEllipticMultiple, NotAPencil };
std::string to_string(PencilKind k);

struct PencilCase {
  PencilKind kind = PencilKind::NotAPencil;
  Integer r = 0;
  std::optional<DivisorClass> chamber_form;
};

PencilCase classify_pencil(const SurfaceData& X, const DivisorClass& D, const Limits& limits = {});

enum class IntegralityVerdict {
  GenericallyIntegral,
  MultipleOfPencil,
  DisjointGenusOneUnion,
  FixedPlusPencil,
  FixedComponentCase,
  NotNef
};
std::string to_string(IntegralityVerdict v);

struct IntegralityReport {
  IntegralityVerdict verdict = IntegralityVerdict::NotNef;
  Integer r = 0;
  Integer r_prime = 0;
  std::optional<DivisorClass> chamber_form;
  ReflectionWord witness;
  std::string detail;
};

IntegralityReport generic_integrality(const SurfaceData& X, const DivisorClass& D, const Limits& limits = {});

struct ModuliReport {
  Integer dimension;
  Integer divisibility_r;
  bool rational = false;
  bool separably_unirational = false;
  // Known only in characteristic zero, where generic members have no cusps.
  std::optional<bool> unirational;
};

ModuliReport moduli_report(const SurfaceData& X, const DivisorClass& D, const Integer& x,
                           const Integer& char_p = 0, const Limits& limits = {});

}  // namespace ras
