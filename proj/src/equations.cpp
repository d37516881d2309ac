#include "ras/equations.hpp"

#include <algorithm>

#include "ras/classify.hpp"
#include "ras/error.hpp"

namespace ras {

std::string to_string(EquationKind k) {
  switch (k) {
    case EquationKind::SymmetricElliptic: return "SymmetricElliptic";
    case EquationKind::SymmetricQDifference: return "SymmetricQDifference";
    case EquationKind::SymmetricOrdinary: return "SymmetricOrdinary";
    case EquationKind::NonsymmetricQDifference: return "NonsymmetricQDifference";
    case EquationKind::NonsymmetricOrdinary: return "NonsymmetricOrdinary";
    case EquationKind::Differential: return "Differential";
    case EquationKind::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

namespace {

enum class Pic0Type { Elliptic, Multiplicative, Additive, Unknown };

Pic0Type pic0_type(const CurveTypeTag& t) {
  switch (t.kind) {
    case CurveKind::SmoothGenusOne: return Pic0Type::Elliptic;
    case CurveKind::Node211:
    case CurveKind::TwoSections22:
    case CurveKind::Polygon: return Pic0Type::Multiplicative;
    case CurveKind::Cusp31:
    case CurveKind::Tangent4:
    case CurveKind::Double0: return Pic0Type::Additive;
    case CurveKind::Other: return Pic0Type::Unknown;
  }
  return Pic0Type::Unknown;
}

}  // namespace

EquationKind anticanonical_kind(const SurfaceData& X) {
  const DivisorClass f = DivisorClass::f(X.context());
  std::vector<std::pair<Integer, Integer>> horizontal;  // multiplicity, degree over the base
  for (const auto& c : X.components()) {
    Integer deg = intersect(c.cls, f);
    if (deg > 0) horizontal.emplace_back(c.multiplicity, deg);
  }
  const Pic0Type type = pic0_type(X.curve_type());
  if (horizontal.size() == 1 && horizontal[0].first == 1 && horizontal[0].second == 2) {
    switch (type) {
      case Pic0Type::Elliptic: return EquationKind::SymmetricElliptic;
      case Pic0Type::Multiplicative: return EquationKind::SymmetricQDifference;
      case Pic0Type::Additive: return EquationKind::SymmetricOrdinary;
      case Pic0Type::Unknown: return EquationKind::Unclassified;
    }
  }
  if (horizontal.size() == 2 && horizontal[0] == std::make_pair(Integer(1), Integer(1)) &&
      horizontal[1] == std::make_pair(Integer(1), Integer(1))) {
    if (type == Pic0Type::Multiplicative) return EquationKind::NonsymmetricQDifference;
    if (type == Pic0Type::Additive) return EquationKind::NonsymmetricOrdinary;
    return EquationKind::Unclassified;
  }
  if (horizontal.size() == 1 && horizontal[0].first == 2 && horizontal[0].second == 1)
    return EquationKind::Differential;
  return EquationKind::Unclassified;
}

EquationReport interpret(const SurfaceData& X, const DivisorClass& D) {
  if (!(D.context() == X.context())) throw ContextMismatch("class does not belong to this surface");
  const LatticeContext& ctx = X.context();
  EquationReport rep;
  rep.order = intersect(D, DivisorClass::f(ctx));
  if (rep.order < 1) throw PreconditionError("the class must have positive degree on the fiber");

  // Points are identified by the restriction of their exceptional class.
  std::vector<PicElement> keys;
  for (std::size_t i = 1; i <= ctx.m; ++i) {
    const Integer& r = D.r(i);
    if (r < 0) {
      rep.warnings.push_back("negative coefficient on e" + std::to_string(i) +
                             ": the exceptional curve is a fixed component");
      continue;
    }
    if (r == 0) continue;
    PicElement key = X.restriction(DivisorClass::e(ctx, i));
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      rep.singularities.push_back(SingularPoint{{i}, {r}});
    } else {
      auto& pt = rep.singularities[static_cast<std::size_t>(it - keys.begin())];
      pt.indices.push_back(i);
      pt.partition.push_back(r);
    }
  }
  for (auto& pt : rep.singularities) {
    if (!std::is_sorted(pt.partition.begin(), pt.partition.end(), std::greater<>())) {
      rep.reordered = true;
      std::sort(pt.partition.begin(), pt.partition.end(), std::greater<>());
    }
  }
  if (rep.reordered)
    rep.warnings.push_back("coefficients at a repeated point were not in nonincreasing order");
  if (!X.in_kernel(D))
    rep.warnings.push_back("the class restricts nontrivially to the anticanonical curve");

  if (intersect(D, D) == -2 && intersect(D, canonical_class(ctx)) == 0)
    rep.rigid = is_minus_two_class(X, D).accepted;
  rep.kind = anticanonical_kind(X);
  rep.twist_degree = intersect(DivisorClass::s(ctx), X.anticanonical());
  rep.trivial = rep.order == 1 && rep.singularities.empty();
  return rep;
}

SurfaceData twist_action(const SurfaceData& X, const DivisorClass& v, const AbGroup::Element& q) {
  const LatticeContext& ctx = X.context();
  if (!(v.context() == ctx)) throw ContextMismatch("twist class does not belong to this surface");
  const AbGroup& G = X.pic0();
  G.check(q);
  std::vector<DivisorClass> basis{DivisorClass::s(ctx), DivisorClass::f(ctx)};
  for (std::size_t i = 1; i <= ctx.m; ++i) basis.push_back(DivisorClass::e(ctx, i));
  std::vector<AbGroup::Element> imgs = X.images();
  for (std::size_t k = 0; k < basis.size(); ++k)
    imgs[k] = G.add(imgs[k], G.scale(intersect(v, basis[k]), q));
  return X.with_images(G, std::move(imgs));
}

std::pair<DivisorClass, Integer> duality_action(const DivisorClass& D, const Integer& x) {
  return {D, intersect(D, D) - x};
}

}  // namespace ras
