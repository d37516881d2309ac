#pragma once

#include <json.hpp>

#include "ras/classify.hpp"
#include "ras/coxeter.hpp"
#include "ras/enumerate.hpp"
#include "ras/equations.hpp"
#include "ras/surface.hpp"

namespace ras::json {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json to_json(const Integer& x);
Integer integer_from_json(const json& j);

json to_json(const DivisorClass& D);
DivisorClass class_from_json(const json& j, const LatticeContext& ctx);

json to_json(const ReflectionWord& w);
ReflectionWord word_from_json(const json& j);

json to_json(const AbGroup& G);
AbGroup group_from_json(const json& j);
json element_to_json(const AbGroup::Element& x);
AbGroup::Element element_from_json(const json& j, const AbGroup& G);

json to_json(const PicElement& p);

json to_json(const SurfaceData& X);
// Missing components default to an integral smooth -K and missing Pic^0 data
// to the generic surface. "kernel_relations" lists classes forced trivial.
SurfaceData surface_from_json(const json& j);

json to_json(const CurveTest& t);
json to_json(const ChamberResult& r);
json to_json(const NefResult& r);
json to_json(const EffectiveDecomposition& d);
json to_json(const EffectivityResult& r);
json to_json(const PencilCase& p);
json to_json(const IntegralityReport& r);
json to_json(const ModuliReport& r);
json to_json(const RootClassification& r);
json to_json(const EquationReport& r);
json to_json(const StratumDescriptor& s);
json census_summary(const CensusResult& r);

}  // namespace ras::json
