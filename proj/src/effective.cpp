// Effectiveness, nefness and the curve tests. Every walk keeps classes in the
// coordinates of the surface and moves a Frame, so the stored components and
// the restriction map never have to be transformed.

#include <algorithm>
#include <map>
#include <set>

#include "ras/classify.hpp"
#include "ras/error.hpp"

namespace ras {

std::string to_string(ChamberFailure f) {
  switch (f) {
    case ChamberFailure::None: return "none";
    case ChamberFailure::EffectiveRoot: return "effective simple root meets the class negatively";
    case ChamberFailure::NegativeFiber: return "negative degree on the fiber class";
    case ChamberFailure::NegativeLastExceptional: return "negative degree on the last exceptional class";
  }
  return "none";
}

std::string to_string(PartKind k) {
  switch (k) {
    case PartKind::MinusDCurve: return "MinusDCurve";
    case PartKind::Anticanonical: return "Anticanonical";
    case PartKind::Ruling: return "Ruling";
  }
  return "MinusDCurve";
}

DivisorClass EffectiveDecomposition::total(const LatticeContext& ctx) const {
  DivisorClass t(ctx);
  for (const auto& p : parts) t += p.coefficient * p.cls;
  return t;
}

void EffectiveDecomposition::add(const DivisorClass& cls, const Integer& coefficient, PartKind kind,
                                 const Integer& d) {
  if (coefficient == 0) return;
  for (auto& p : parts)
    if (p.kind == kind && p.cls == cls) {
      p.coefficient += coefficient;
      return;
    }
  parts.push_back(DecompositionPart{cls, coefficient, kind, d});
}

namespace {

// Root effectiveness and effectiveness call each other. A top-level root
// query is answered by Kleene iteration: during a pass every root that is
// already being answered is assumed ineffective and all answers are kept
// provisionally. If some assumption turns out wrong the pass is repeated with
// the positives found so far, and a stable pass is committed to the surface.
struct RootPass {
  const SurfaceData* surface = nullptr;
  std::vector<DivisorClass> stack;
  std::map<DivisorClass, bool> provisional;
  std::set<DivisorClass> assumed_false;
};
thread_local RootPass* current_pass = nullptr;
constexpr std::size_t kMaxRootDepth = 64;

bool root_effective_by_components(const SurfaceData& X, const DivisorClass& root, const Limits& limits) {
  for (const auto& comp : X.components()) {
    const DivisorClass& C = comp.cls;
    if (intersect(C, C) < 0 && intersect(root, C) < 0 && is_effective(X, root - C, limits).effective)
      return true;
  }
  return false;
}

bool nested_root_query(RootPass& pass, const SurfaceData& X, const DivisorClass& root,
                       const Limits& limits) {
  if (auto it = pass.provisional.find(root); it != pass.provisional.end()) return it->second;
  if (std::find(pass.stack.begin(), pass.stack.end(), root) != pass.stack.end()) {
    pass.assumed_false.insert(root);
    return false;
  }
  if (pass.stack.size() >= kMaxRootDepth) throw IterationLimit("root effectiveness recursion is too deep", {});
  pass.stack.push_back(root);
  bool found;
  try {
    found = root_effective_by_components(X, root, limits);
  } catch (...) {
    pass.stack.pop_back();
    throw;
  }
  pass.stack.pop_back();
  pass.provisional[root] = found;
  return found;
}

PartKind kind_for(const Integer& self_int) {
  return self_int < 0 ? PartKind::MinusDCurve : PartKind::Ruling;
}

Integer d_for(const Integer& self_int) { return self_int < 0 ? Integer(-self_int) : Integer(0); }

// Effective cone of the surface at level 0 or 1 of a frame. At level 1 the
// frame is first made even, which only moves s and e_1.
struct BaseCone {
  Frame frame;
  std::size_t level = 0;
  Integer dd = 0;
  bool through_p1 = false;
  std::vector<DivisorClass> gens;
  std::vector<Integer> self_int;

  std::vector<Integer> expand(const DivisorClass& R) const {
    DivisorClass c = frame.coordinates(R);
    const Integer& n = c.n();
    const Integer& d = c.d();
    const Integer b = d + dd * n;
    if (level == 0) return {n, b};
    const Integer& r1 = c.r(1);
    return {n, b, through_p1 ? n + b - r1 : b - r1};
  }
};

DivisorClass pushforward(const Frame& F, const DivisorClass& C, std::size_t k) {
  DivisorClass c = F.coordinates(C);
  for (std::size_t i = k + 1; i <= F.m(); ++i) c[i + 1] = 0;
  return F.from_coordinates(c);
}

BaseCone base_cone(const SurfaceData& X, Frame F, std::size_t level) {
  BaseCone cone;
  if (level == 1 && F.parity() == Parity::Odd) F.elementary_transform();
  cone.frame = F;
  cone.level = level;

  // The section of negative self-intersection is either a component or, on
  // an even frame, the curve s - f living away from the anticanonical curve.
  std::optional<DivisorClass> smin_component;
  for (const auto& comp : X.components()) {
    DivisorClass c = F.coordinates(comp.cls);
    if (c.n() == 1 && c.d() < 0) {
      cone.dd = -c.d();
      smin_component = comp.cls;
      break;
    }
  }
  if (!smin_component && F.parity() == Parity::Even && X.in_kernel(F.s() - F.f())) cone.dd = 1;

  const DivisorClass smin = F.s() - cone.dd * F.f();
  if (level == 0) {
    cone.gens = {smin, F.f()};
  } else {
    cone.through_p1 = cone.dd == 0;
    if (smin_component) cone.through_p1 = F.coordinates(*smin_component).r(1) >= 1;
    DivisorClass g1 = cone.through_p1 ? smin - F.e(1) : smin;
    cone.gens = {g1, F.f() - F.e(1), F.e(1)};
  }
  for (const auto& g : cone.gens) {
    // Self-intersection on the level surface equals that of the pullback.
    cone.self_int.push_back(intersect(g, g));
  }
  return cone;
}

EffectiveDecomposition expand_in_cone(const BaseCone& cone, const DivisorClass& R) {
  auto coeffs = cone.expand(R);
  EffectiveDecomposition dec;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0) throw PreconditionError("class is not in the effective cone of the base level");
    dec.add(cone.gens[i], coeffs[i], kind_for(cone.self_int[i]), d_for(cone.self_int[i]));
  }
  return dec;
}

// Turn curves on the level-k surface into curves on level k + 1.
EffectiveDecomposition lift(const SurfaceData& X, const Frame& F, std::size_t k,
                            const EffectiveDecomposition& in) {
  EffectiveDecomposition out;
  const DivisorClass& e_next = F.e(k + 1);
  for (const auto& p : in.parts) {
    if (p.kind == PartKind::Anticanonical) {
      out.add(F.anticanonical_at_level(k + 1), p.coefficient, PartKind::Anticanonical, 0);
      out.add(e_next, p.coefficient, PartKind::MinusDCurve, 1);
      continue;
    }
    if (p.kind == PartKind::Ruling) {
      out.add(p.cls, p.coefficient, p.kind, p.self_intersection_negated);
      continue;
    }
    const Component* owner = nullptr;
    for (const auto& comp : X.components())
      if (!pushforward(F, comp.cls, k).is_zero() && pushforward(F, comp.cls, k) == p.cls) {
        owner = &comp;
        break;
      }
    if (owner) {
      DivisorClass strict = pushforward(F, owner->cls, k + 1);
      Integer mu = F.coordinates(owner->cls).r(k + 1);
      Integer si = intersect(strict, strict);
      out.add(strict, p.coefficient, kind_for(si), d_for(si));
      if (mu != 0) out.add(e_next, p.coefficient * mu, PartKind::MinusDCurve, 1);
      continue;
    }
    if (p.self_intersection_negated == 1 && X.in_kernel(p.cls - e_next)) {
      out.add(p.cls - e_next, p.coefficient, PartKind::MinusDCurve, 2);
      out.add(e_next, p.coefficient, PartKind::MinusDCurve, 1);
      continue;
    }
    out.add(p.cls, p.coefficient, p.kind, p.self_intersection_negated);
  }
  return out;
}

void merge_into(EffectiveDecomposition& dst, const EffectiveDecomposition& src) {
  for (const auto& p : src.parts) dst.add(p.cls, p.coefficient, p.kind, p.self_intersection_negated);
}

// R is nef, chambered in F, and a pullback from level k.
EffectiveDecomposition decompose_level(const SurfaceData& X, const Frame& F, DivisorClass R,
                                       std::size_t k) {
  EffectiveDecomposition dec;
  for (;;) {
    if (R.is_zero()) return dec;
    if (k <= 1) {
      merge_into(dec, expand_in_cone(base_cone(X, F, k), R));
      return dec;
    }
    Integer rk = intersect(R, F.e(k));
    if (rk < 0) throw PreconditionError("class is not nef: negative on the last exceptional curve");
    if (rk == 0) {
      merge_into(dec, lift(X, F, k - 1, decompose_level(X, F, R, k - 1)));
      return dec;
    }
    DivisorClass A = F.anticanonical_at_level(k);
    dec.add(A, 1, PartKind::Anticanonical, 0);
    R -= A;
  }
}

Integer h0_nef(const SurfaceData& X, const Frame& F, DivisorClass R) {
  std::size_t k = F.m();
  Integer acc = 0;
  for (;;) {
    if (R.is_zero()) return acc + 1;
    while (k >= 1 && intersect(R, F.e(k)) == 0) --k;
    DivisorClass A = F.anticanonical_at_level(k);
    Integer t = intersect(R, A);
    if (t > 0) return acc + euler_characteristic(R);
    if (t < 0) throw PreconditionError("residual class is not nef");
    if (X.in_kernel(R)) acc += 1;
    R -= A;
  }
}

bool small_cone_effective(const BaseCone& cone, const DivisorClass& D) {
  auto c = cone.expand(D);
  return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x >= 0; });
}

}  // namespace

bool is_root_effective(const SurfaceData& X, const DivisorClass& root, const Limits& limits) {
  if (X.in_kernel(root)) return true;
  if (X.is_component(root)) return true;
  auto& cache = X.root_cache();
  {
    std::lock_guard<std::mutex> hold(cache.lock);
    auto it = cache.answers.find(root);
    if (it != cache.answers.end()) return it->second;
  }
  if (current_pass && current_pass->surface == &X) return nested_root_query(*current_pass, X, root, limits);

  RootPass* outer = current_pass;
  std::map<DivisorClass, bool> known;
  for (;;) {
    RootPass pass;
    pass.surface = &X;
    pass.provisional = known;
    current_pass = &pass;
    bool found;
    try {
      found = nested_root_query(pass, X, root, limits);
    } catch (...) {
      current_pass = outer;
      throw;
    }
    current_pass = outer;
    bool stable = true;
    for (const auto& r : pass.assumed_false)
      if (pass.provisional[r]) stable = false;
    if (stable) {
      std::lock_guard<std::mutex> hold(cache.lock);
      for (const auto& [r, v] : pass.provisional) cache.answers.emplace(r, v);
      return found;
    }
    for (const auto& [r, v] : pass.provisional)
      if (v) known[r] = true;
  }
}

EffectivityResult is_effective(const SurfaceData& X, const DivisorClass& D0, const Limits& limits) {
  if (!(D0.context() == X.context())) throw ContextMismatch("class does not belong to this surface");
  EffectivityResult res;
  const std::size_t m = X.m();
  if (m <= 1) {
    BaseCone cone = base_cone(X, Frame(X.context()), m);
    if (!small_cone_effective(cone, D0)) {
      res.reason = "outside the effective cone";
      return res;
    }
    res.effective = true;
    res.decomposition = expand_in_cone(cone, D0);
    return res;
  }

  Frame F(X.context());
  DivisorClass D = D0;
  std::vector<SimpleRootIndex> steps;
  const std::size_t budget = limits.budget_for(D0);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > budget) throw IterationLimit("effectiveness walk exceeded its step budget", steps);
    if (intersect(D, F.f()) < 0) {
      res.reason = "negative degree on the fiber class";
      res.witness = ReflectionWord::from_steps(steps);
      return res;
    }
    bool stripped = false;
    for (const auto& comp : X.components()) {
      const DivisorClass& C = comp.cls;
      Integer si = intersect(C, C);
      if (si < 0 && intersect(D, C) < 0) {
        D -= C;
        res.decomposition.add(C, 1, PartKind::MinusDCurve, -si);
        stripped = true;
        break;
      }
    }
    if (stripped) continue;
    const DivisorClass& em = F.e(m);
    Integer k = intersect(D, em);
    if (k < 0) {
      D += k * em;
      res.decomposition.add(em, -k, PartKind::MinusDCurve, 1);
      continue;
    }
    auto idx = F.first_negative_root(D);
    if (!idx) {
      res.effective = true;
      res.witness = ReflectionWord::from_steps(steps);
      merge_into(res.decomposition, decompose_level(X, F, D, m));
      res.residual = D;
      res.frame = F;
      return res;
    }
    DivisorClass sigma = F.simple_root(*idx);
    if (is_root_effective(X, sigma, limits)) {
      D -= sigma;
      res.decomposition.add(sigma, 1, PartKind::MinusDCurve, 2);
      continue;
    }
    F.reflect(*idx);
    steps.push_back(*idx);
  }
}

EffectiveDecomposition decompose_nef(const SurfaceData& X, const DivisorClass& D, const Limits& limits) {
  (void)limits;
  Frame F(X.context());
  if (X.m() <= 1) {
    if (!is_nef(X, D).nef) throw PreconditionError("decompose_nef needs a nef class");
    return expand_in_cone(base_cone(X, F, X.m()), D);
  }
  if (F.first_negative_root(D)) throw PreconditionError("decompose_nef needs a class in the fundamental chamber");
  return decompose_level(X, F, D, X.m());
}

Integer h0(const SurfaceData& X, const DivisorClass& D, const Limits& limits) {
  EffectivityResult eff = is_effective(X, D, limits);
  if (!eff.effective) return 0;
  if (X.m() <= 1) {
    BaseCone cone = base_cone(X, Frame(X.context()), X.m());
    DivisorClass R = D;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < cone.gens.size(); ++i)
        if (cone.self_int[i] < 0 && intersect(R, cone.gens[i]) < 0) {
          R -= cone.gens[i];
          changed = true;
          break;
        }
    }
    return euler_characteristic(R);
  }
  return h0_nef(X, *eff.frame, *eff.residual);
}

ChamberResult reduce_to_chamber_from(const SurfaceData& X, const DivisorClass& D, Frame F,
                                     const Limits& limits) {
  ChamberResult res;
  std::vector<SimpleRootIndex> steps;
  const std::size_t budget = limits.budget_for(D);
  const std::size_t m = X.m();
  for (std::size_t iter = 0;; ++iter) {
    if (iter > budget) throw IterationLimit("chamber walk exceeded its step budget", steps);
    res.word = ReflectionWord::from_steps(steps);
    res.frame = F;
    if (intersect(D, F.f()) < 0) {
      res.failure = ChamberFailure::NegativeFiber;
      res.detail = to_string(res.failure);
      return res;
    }
    if (m >= 1 && intersect(D, F.e(m)) < 0) {
      res.failure = ChamberFailure::NegativeLastExceptional;
      res.detail = to_string(res.failure);
      return res;
    }
    auto idx = F.first_negative_root(D);
    if (!idx) {
      res.success = true;
      res.chamber_form = F.coordinates(D);
      return res;
    }
    if (is_root_effective(X, F.simple_root(*idx), limits)) {
      res.failure = ChamberFailure::EffectiveRoot;
      res.detail = "effective simple root " + F.coordinates(F.simple_root(*idx)).to_string() +
                   " (index " + std::to_string(*idx) + ") meets the class negatively";
      return res;
    }
    F.reflect(*idx);
    steps.push_back(*idx);
  }
}

ChamberResult reduce_to_chamber(const SurfaceData& X, const DivisorClass& D, const Limits& limits) {
  if (!(D.context() == X.context())) throw ContextMismatch("class does not belong to this surface");
  return reduce_to_chamber_from(X, D, Frame(X.context()), limits);
}

NefResult is_nef(const SurfaceData& X, const DivisorClass& D, const Limits& limits) {
  if (!(D.context() == X.context())) throw ContextMismatch("class does not belong to this surface");
  NefResult res;
  if (X.m() <= 1) {
    // Dual of the explicit effective cone.
    BaseCone cone = base_cone(X, Frame(X.context()), X.m());
    for (const auto& g : cone.gens)
      if (intersect(D, g) < 0) {
        res.reason = "negative on the curve " + g.to_string();
        return res;
      }
    res.nef = true;
    res.chamber_form = D;
    return res;
  }
  for (const auto& comp : X.components()) {
    const DivisorClass& C = comp.cls;
    if (intersect(C, C) < -2 && intersect(D, C) < 0) {
      res.reason = "negative on the component " + C.to_string();
      return res;
    }
  }
  if (intersect(D, X.anticanonical()) < 0) {
    res.reason = "negative on the anticanonical curve";
    return res;
  }
  ChamberResult ch = reduce_to_chamber(X, D, limits);
  res.witness = ch.word;
  if (!ch.success) {
    res.reason = ch.detail;
    return res;
  }
  res.nef = true;
  res.chamber_form = ch.chamber_form;
  return res;
}

CurveTest is_minus_one_class(const SurfaceData& X, const DivisorClass& E, const Limits& limits) {
  if (!(E.context() == X.context())) throw ContextMismatch("class does not belong to this surface");
  CurveTest res;
  const DivisorClass K = canonical_class(X.context());
  if (intersect(E, E) != -1 || intersect(E, K) != -1) {
    res.reason = "numerically not an exceptional class";
    return res;
  }
  const std::size_t m = X.m();
  if (m == 0) {
    BaseCone cone = base_cone(X, Frame(X.context()), 0);
    res.accepted = X.context().parity == Parity::Odd && cone.dd == 0 && E == DivisorClass::s(X.context());
    res.reason = res.accepted ? "the section of F_1" : "no exceptional curve on this Hirzebruch surface";
    return res;
  }
  if (m == 1) {
    BaseCone cone = base_cone(X, Frame(X.context()), 1);
    const Frame& G = cone.frame;
    if (E == G.e(1) || E == G.f() - G.e(1)) {
      res.accepted = true;
    } else if (E == G.s() - G.e(1)) {
      res.accepted = cone.dd == 0;
    }
    res.reason = res.accepted ? "exceptional curve of the one-point blowup" : "reducible in this class";
    return res;
  }
  Frame F(X.context());
  std::vector<SimpleRootIndex> steps;
  const std::size_t budget = limits.budget_for(E);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > budget) throw IterationLimit("exceptional-curve walk exceeded its step budget", steps);
    res.witness = ReflectionWord::from_steps(steps);
    if (E == F.e(m)) {
      res.accepted = true;
      res.reason = "reached the last exceptional class";
      return res;
    }
    if (intersect(E, F.f()) < 0) {
      res.reason = "negative degree on the fiber class";
      return res;
    }
    auto idx = F.first_negative_root(E);
    if (!idx) {
      res.reason = "reached the fundamental chamber without meeting e_m";
      return res;
    }
    if (is_root_effective(X, F.simple_root(*idx), limits)) {
      res.reason = "meets an effective simple root negatively";
      return res;
    }
    F.reflect(*idx);
    steps.push_back(*idx);
  }
}

CurveTest is_minus_two_class(const SurfaceData& X, const DivisorClass& D, const Limits& limits) {
  if (!(D.context() == X.context())) throw ContextMismatch("class does not belong to this surface");
  CurveTest res;
  const DivisorClass K = canonical_class(X.context());
  if (intersect(D, D) != -2 || intersect(D, K) != 0) {
    res.reason = "numerically not a root";
    return res;
  }
  Frame F(X.context());
  std::vector<SimpleRootIndex> steps;
  const std::size_t budget = limits.budget_for(D);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > budget) throw IterationLimit("-2-curve walk exceeded its step budget", steps);
    res.witness = ReflectionWord::from_steps(steps);
    for (std::size_t i = 0; i < F.simple_root_count(); ++i)
      if (D == F.simple_root(i)) {
        // An effective simple root is irreducible exactly when it avoids the
        // anticanonical curve or is one of its components.
        bool eff = is_root_effective(X, D, limits);
        res.accepted = eff && (X.in_kernel(D) || X.is_component(D));
        res.reason = res.accepted ? "reached an effective simple root"
                                  : (eff ? "effective but reducible" : "reached an ineffective simple root");
        return res;
      }
    if (intersect(D, F.f()) < 0) {
      res.reason = "negative degree on the fiber class";
      return res;
    }
    auto idx = F.first_negative_root(D);
    if (!idx) {
      res.reason = "reached the fundamental chamber";
      return res;
    }
    if (is_root_effective(X, F.simple_root(*idx), limits)) {
      res.reason = "meets an effective simple root negatively";
      return res;
    }
    F.reflect(*idx);
    steps.push_back(*idx);
  }
}

}  // namespace ras
