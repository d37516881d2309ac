#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ras/abgroup.hpp"
#include "ras/coxeter.hpp"
#include "ras/frame.hpp"
#include "ras/picard.hpp"

namespace ras {

// Iteration controls shared by every walk. Zero means the default budget.
struct Limits {
  std::size_t max_steps = 0;
  std::size_t budget_for(const DivisorClass& D) const {
    return max_steps ? max_steps : default_step_budget(D);
  }
};

enum class CurveKind {
  SmoothGenusOne,
  Node211,
  Cusp31,
  TwoSections22,
  Tangent4,
  Double0,
  Polygon,
  Other
};

struct CurveTypeTag {
  CurveKind kind = CurveKind::SmoothGenusOne;
  std::size_t sides = 0;  // Polygon only
  std::string label;      // Other only

  std::string to_string() const;
  static CurveTypeTag parse(const std::string& s);
  friend bool operator==(const CurveTypeTag&, const CurveTypeTag&) = default;
};

struct Component {
  DivisorClass cls;
  Integer multiplicity;
  friend bool operator==(const Component&, const Component&) = default;
};

// Restriction of a line bundle to the anticanonical curve: one degree per
// component and an element of the degree-zero Picard group.
struct PicElement {
  std::vector<Integer> degrees;
  AbGroup::Element pic0;

  bool degrees_zero() const;
  friend bool operator==(const PicElement&, const PicElement&) = default;
};

class SurfaceData {
 public:
  // images holds s, f, e_1, ..., e_m in that order.
  SurfaceData(LatticeContext ctx, std::vector<Component> components, CurveTypeTag curve_type,
              AbGroup pic0, std::vector<AbGroup::Element> images);

  // Integral smooth anticanonical curve and a free Pic^0 with independent images.
  static SurfaceData generic(LatticeContext ctx);

  const LatticeContext& context() const { return ctx_; }
  std::size_t m() const { return ctx_.m; }
  const std::vector<Component>& components() const { return components_; }
  const CurveTypeTag& curve_type() const { return curve_type_; }
  const AbGroup& pic0() const { return pic0_; }
  const std::vector<AbGroup::Element>& images() const { return images_; }
  const AbGroup::Element& image_s() const { return images_[0]; }
  const AbGroup::Element& image_f() const { return images_[1]; }
  const AbGroup::Element& image_e(std::size_t i) const { return images_.at(i + 1); }

  bool integral() const;
  bool reduced() const;
  DivisorClass anticanonical() const { return anticanonical_class(ctx_); }

  PicElement restriction(const DivisorClass& D) const;
  bool in_kernel(const DivisorClass& D) const;
  // True when D is one of the stored components.
  bool is_component(const DivisorClass& D) const;

  // Same data with D forced into the kernel: Pic^0 is replaced by its
  // quotient by the subgroup generated by the restriction of D.
  SurfaceData with_kernel_relation(const DivisorClass& D) const;
  SurfaceData with_images(AbGroup pic0, std::vector<AbGroup::Element> images) const;

  friend bool operator==(const SurfaceData& a, const SurfaceData& b) {
    return a.ctx_ == b.ctx_ && a.components_ == b.components_ && a.curve_type_ == b.curve_type_ &&
           a.pic0_ == b.pic0_ && a.images_ == b.images_;
  }

  // Memo of settled root-effectiveness answers, shared by copies of the same data.
  struct RootCache {
    std::mutex lock;
    std::map<DivisorClass, bool> answers;
  };
  RootCache& root_cache() const { return *root_cache_; }

 private:
  void validate() const;

  LatticeContext ctx_;
  std::vector<Component> components_;
  CurveTypeTag curve_type_;
  AbGroup pic0_;
  std::vector<AbGroup::Element> images_;
  std::shared_ptr<RootCache> root_cache_ = std::make_shared<RootCache>();
};

// Re-express the surface in another blowdown structure. Components are written
// in the frame coordinates and images become the restrictions of the frame basis.
SurfaceData expressed_in(const SurfaceData& X, const Frame& F);

bool is_root_effective(const SurfaceData& X, const DivisorClass& root, const Limits& limits = {});
bool is_admissible(const SurfaceData& X, SimpleRootIndex i, const Limits& limits = {});

struct DotActionResult {
  SurfaceData surface;
  // The letters that acted linearly, in the usual right-to-left order.
  ReflectionWord applied;
  Frame frame;
};

DotActionResult apply_dot_action(const SurfaceData& X, const ReflectionWord& w,
                                 const Limits& limits = {});

// Quotient Pic^0 by the restriction of K, which must be torsion.
SurfaceData relative_pic_transform(const SurfaceData& X);

using CombinatorialType = std::vector<std::pair<Integer, DivisorClass>>;
CombinatorialType combinatorial_type(const SurfaceData& X);

// Every splitting of the anticanonical curve into two effective parts A + B
// satisfies A.B > 0.
bool numerically_connected(const std::vector<Component>& components);

}  // namespace ras
