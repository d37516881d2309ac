#include "ras/surface.hpp"

#include <algorithm>

#include "ras/error.hpp"

namespace ras {

std::string CurveTypeTag::to_string() const {
  switch (kind) {
    case CurveKind::SmoothGenusOne: return "smooth";
    case CurveKind::Node211: return "211";
    case CurveKind::Cusp31: return "31";
    case CurveKind::TwoSections22: return "22";
    case CurveKind::Tangent4: return "4";
    case CurveKind::Double0: return "0";
    case CurveKind::Polygon: return "polygon:" + std::to_string(sides);
    case CurveKind::Other: return label.empty() ? "other" : "other:" + label;
  }
  return "other";
}

CurveTypeTag CurveTypeTag::parse(const std::string& s) {
  CurveTypeTag t;
  if (s == "smooth" || s == "smooth_genus_one") {
    t.kind = CurveKind::SmoothGenusOne;
  } else if (s == "211" || s == "node") {
    t.kind = CurveKind::Node211;
  } else if (s == "31" || s == "cusp") {
    t.kind = CurveKind::Cusp31;
  } else if (s == "22" || s == "two_sections") {
    t.kind = CurveKind::TwoSections22;
  } else if (s == "4" || s == "tangent") {
    t.kind = CurveKind::Tangent4;
  } else if (s == "0" || s == "double") {
    t.kind = CurveKind::Double0;
  } else if (s.rfind("polygon:", 0) == 0) {
    t.kind = CurveKind::Polygon;
    try {
      t.sides = std::stoul(s.substr(8));
    } catch (const std::exception&) {
      throw ValidationError("bad polygon curve type \"" + s + "\"");
    }
  } else if (s == "other") {
    t.kind = CurveKind::Other;
  } else if (s.rfind("other:", 0) == 0) {
    t.kind = CurveKind::Other;
    t.label = s.substr(6);
  } else {
    throw ValidationError("unknown curve type \"" + s + "\"");
  }
  return t;
}

bool PicElement::degrees_zero() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const Integer& x) { return x == 0; });
}

SurfaceData::SurfaceData(LatticeContext ctx, std::vector<Component> components,
                         CurveTypeTag curve_type, AbGroup pic0,
                         std::vector<AbGroup::Element> images)
    : ctx_(ctx),
      components_(std::move(components)),
      curve_type_(std::move(curve_type)),
      pic0_(std::move(pic0)),
      images_(std::move(images)) {
  for (auto& x : images_) {
    pic0_.check(x);
    x = pic0_.reduce(std::move(x));
  }
  validate();
}

void SurfaceData::validate() const {
  if (components_.empty()) throw ValidationError("anticanonical curve has no components");
  DivisorClass total(ctx_);
  for (const auto& c : components_) {
    if (!(c.cls.context() == ctx_))
      throw ContextMismatch("component " + c.cls.to_string() + " lives in another lattice");
    if (c.multiplicity < 1) throw ValidationError("component multiplicities must be positive");
    total += c.multiplicity * c.cls;
  }
  if (!(total == anticanonical()))
    throw ValidationError("components sum to " + total.to_string() + ", not -K = " +
                          anticanonical().to_string());
  if (images_.size() != ctx_.rank())
    throw ValidationError("expected " + std::to_string(ctx_.rank()) + " basis images, got " +
                          std::to_string(images_.size()));

  const std::size_t k = components_.size();
  auto all_reduced = [&] {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Component& c) { return c.multiplicity == 1; });
  };
  switch (curve_type_.kind) {
    case CurveKind::SmoothGenusOne:
    case CurveKind::Node211:
    case CurveKind::Cusp31:
      if (k != 1 || components_[0].multiplicity != 1)
        throw ValidationError("curve type " + curve_type_.to_string() +
                              " needs a single reduced component");
      break;
    case CurveKind::TwoSections22:
    case CurveKind::Tangent4:
      if (k != 2 || !all_reduced())
        throw ValidationError("curve type " + curve_type_.to_string() +
                              " needs exactly two reduced components");
      break;
    case CurveKind::Double0: {
      auto doubles = std::count_if(components_.begin(), components_.end(),
                                   [](const Component& c) { return c.multiplicity == 2; });
      if (doubles != 1) throw ValidationError("curve type 0 needs one double component");
      break;
    }
    case CurveKind::Polygon:
      if (k != curve_type_.sides || !all_reduced())
        throw ValidationError("polygon curve type needs " + std::to_string(curve_type_.sides) +
                              " reduced components");
      break;
    case CurveKind::Other: break;
  }
}

SurfaceData SurfaceData::generic(LatticeContext ctx) {
  AbGroup G(ctx.rank(), {});
  std::vector<AbGroup::Element> images;
  for (std::size_t i = 0; i < ctx.rank(); ++i) images.push_back(G.generator(i));
  return SurfaceData(ctx, {Component{anticanonical_class(ctx), 1}}, CurveTypeTag{}, G,
                     std::move(images));
}

bool SurfaceData::integral() const {
  return components_.size() == 1 && components_[0].multiplicity == 1;
}

bool SurfaceData::reduced() const {
  return curve_type_.kind != CurveKind::Double0 &&
         std::all_of(components_.begin(), components_.end(),
                     [](const Component& c) { return c.multiplicity == 1; });
}

PicElement SurfaceData::restriction(const DivisorClass& D) const {
  if (!(D.context() == ctx_))
    throw ContextMismatch("class " + D.to_string() + " does not belong to this surface");
  PicElement out;
  for (const auto& c : components_) out.degrees.push_back(intersect(D, c.cls));
  AbGroup::Element x = pic0_.scale(D.n(), images_[0]);
  x = pic0_.add(x, pic0_.scale(D.d(), images_[1]));
  for (std::size_t i = 1; i <= ctx_.m; ++i)
    x = pic0_.add(x, pic0_.scale(D.e_coefficient(i), images_[i + 1]));
  out.pic0 = std::move(x);
  return out;
}

bool SurfaceData::in_kernel(const DivisorClass& D) const {
  PicElement r = restriction(D);
  return r.degrees_zero() && pic0_.is_zero(r.pic0);
}

bool SurfaceData::is_component(const DivisorClass& D) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const Component& c) { return c.cls == D; });
}

SurfaceData SurfaceData::with_kernel_relation(const DivisorClass& D) const {
  PicElement r = restriction(D);
  if (!r.degrees_zero())
    throw PreconditionError(D.to_string() + " has nonzero degree on the anticanonical curve");
  auto q = pic0_.quotient(r.pic0);
  std::vector<AbGroup::Element> imgs;
  for (const auto& x : images_) imgs.push_back(q.project(x));
  return SurfaceData(ctx_, components_, curve_type_, q.group, std::move(imgs));
}

SurfaceData SurfaceData::with_images(AbGroup pic0, std::vector<AbGroup::Element> images) const {
  return SurfaceData(ctx_, components_, curve_type_, std::move(pic0), std::move(images));
}

SurfaceData expressed_in(const SurfaceData& X, const Frame& F) {
  std::vector<Component> comps;
  for (const auto& c : X.components()) comps.push_back(Component{F.coordinates(c.cls), c.multiplicity});
  std::vector<AbGroup::Element> imgs;
  imgs.push_back(X.restriction(F.s()).pic0);
  imgs.push_back(X.restriction(F.f()).pic0);
  for (std::size_t i = 1; i <= F.m(); ++i) imgs.push_back(X.restriction(F.e(i)).pic0);
  return SurfaceData(F.local_context(), std::move(comps), X.curve_type(), X.pic0(), std::move(imgs));
}

bool is_admissible(const SurfaceData& X, SimpleRootIndex i, const Limits& limits) {
  DivisorClass sigma = simple_root(X.context(), i);
  if (!is_root_effective(X, sigma, limits)) return true;
  return std::all_of(X.components().begin(), X.components().end(),
                     [&](const Component& c) { return intersect(sigma, c.cls) == 0; });
}

DotActionResult apply_dot_action(const SurfaceData& X, const ReflectionWord& w,
                                 const Limits& limits) {
  Frame F(X.context());
  std::vector<SimpleRootIndex> applied;
  const auto steps = w.steps();
  for (std::size_t pos = 0; pos < steps.size(); ++pos) {
    const SimpleRootIndex i = steps[pos];
    if (i >= F.simple_root_count()) throw PreconditionError("reflection letter out of range");
    DivisorClass sigma = F.simple_root(i);
    if (!is_root_effective(X, sigma, limits)) {
      F.reflect(i);
      applied.push_back(i);
      continue;
    }
    bool orthogonal = std::all_of(X.components().begin(), X.components().end(),
                                  [&](const Component& c) { return intersect(sigma, c.cls) == 0; });
    if (!orthogonal)
      throw InadmissibleLetter("letter " + std::to_string(i) + " at position " +
                                   std::to_string(pos) + " reflects in the effective root " +
                                   F.coordinates(sigma).to_string() +
                                   ", which meets the anticanonical curve",
                               pos, i);
  }
  return DotActionResult{expressed_in(X, F), ReflectionWord::from_steps(applied), F};
}

SurfaceData relative_pic_transform(const SurfaceData& X) {
  if (!X.reduced())
    throw PreconditionError("relative Picard transform needs a reduced anticanonical curve");
  PicElement w = X.restriction(canonical_class(X.context()));
  if (!w.degrees_zero())
    throw PreconditionError("restriction of K has nonzero multidegree");
  if (!X.pic0().order(w.pic0))
    throw PreconditionError("restriction of K has infinite order");
  auto q = X.pic0().quotient(w.pic0);
  std::vector<AbGroup::Element> imgs;
  for (const auto& x : X.images()) imgs.push_back(q.project(x));
  return SurfaceData(X.context(), X.components(), X.curve_type(), q.group, std::move(imgs));
}

CombinatorialType combinatorial_type(const SurfaceData& X) {
  CombinatorialType t;
  for (const auto& c : X.components()) t.emplace_back(c.multiplicity, c.cls);
  return t;
}

bool numerically_connected(const std::vector<Component>& components) {
  if (components.empty()) return false;
  DivisorClass total(components[0].cls.context());
  for (const auto& c : components) total += c.multiplicity * c.cls;
  std::vector<Integer> pick(components.size());
  // Odometer over 0 <= pick_i <= multiplicity_i.
  for (;;) {
    std::size_t k = 0;
    while (k < pick.size() && pick[k] == components[k].multiplicity) {
      pick[k] = 0;
      ++k;
    }
    if (k == pick.size()) return true;
    pick[k] += 1;
    DivisorClass A(total.context());
    bool full = true;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      A += pick[i] * components[i].cls;
      if (pick[i] != components[i].multiplicity) full = false;
    }
    if (full) continue;
    if (intersect(A, total - A) <= 0) return false;
  }
}

}  // namespace ras
