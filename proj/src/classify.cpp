#include "ras/classify.hpp"

#include "ras/error.hpp"

namespace ras {

std::string to_string(PencilKind k) {
  switch (k) {
    case PencilKind::FiberClass: return "FiberClass";
    case PencilKind::SevenPointPencil: return "SevenPointPencil";
    case PencilKind::QuasiEllipticMultiple: return "QuasiEllipticMultiple";
    case PencilKind::NotAPencil: return "NotAPencil";
  }
  return "NotAPencil";
}

std::string to_string(IntegralityVerdict v) {
  switch (v) {
    case IntegralityVerdict::GenericallyIntegral: return "GenericallyIntegral";
    case IntegralityVerdict::MultipleOfPencil: return "MultipleOfPencil";
    case IntegralityVerdict::DisjointGenusOneUnion: return "DisjointGenusOneUnion";
    case IntegralityVerdict::FixedPlusPencil: return "FixedPlusPencil";
    case IntegralityVerdict::FixedComponentCase: return "FixedComponentCase";
    case IntegralityVerdict::NotNef: return "NotNef";
  }
  return "NotNef";
}

namespace {

// Chamber walk started from an even blowdown structure.
ChamberResult even_chamber(const SurfaceData& X, const DivisorClass& D, const Limits& limits) {
  Frame F(X.context());
  if (F.parity() == Parity::Odd) F.elementary_transform();
  return reduce_to_chamber_from(X, D, F, limits);
}

// 2s + 2f - e_1 - ... - e_k in the local coordinates of an even frame.
DivisorClass anticanonical_prefix(std::size_t m, std::size_t k) {
  DivisorClass W(LatticeContext{m, Parity::Even});
  W[0] = 2;
  W[1] = 2;
  for (std::size_t i = 1; i <= k; ++i) W[i + 1] = 1;
  return W;
}

// Order of the restriction of w, or nullopt if the multidegree is nonzero or
// the Pic^0 part has infinite order.
std::optional<Integer> restriction_order(const SurfaceData& X, const DivisorClass& w) {
  PicElement r = X.restriction(w);
  if (!r.degrees_zero()) return std::nullopt;
  return X.pic0().order(r.pic0);
}

}  // namespace

PencilCase classify_pencil(const SurfaceData& X, const DivisorClass& D, const Limits& limits) {
  PencilCase out;
  if (!is_nef(X, D, limits).nef) return out;
  const std::size_t m = X.m();
  if (m == 0 && X.context().parity == Parity::Odd) {
    if (D == DivisorClass::f(X.context())) out.kind = PencilKind::FiberClass;
    out.chamber_form = D;
    return out;
  }
  ChamberResult ch = even_chamber(X, D, limits);
  if (!ch.success) return out;
  const DivisorClass& Dc = *ch.chamber_form;
  out.chamber_form = Dc;
  const LatticeContext even{m, Parity::Even};
  if (Dc == DivisorClass::f(even)) {
    out.kind = PencilKind::FiberClass;
    out.r = 1;
    return out;
  }
  if (m >= 7 && Dc == anticanonical_prefix(m, 7)) {
    for (std::size_t k = 8; k <= m; ++k)
      if (X.in_kernel(D - ch.frame.e(k))) return out;
    out.kind = PencilKind::SevenPointPencil;
    out.r = 1;
    return out;
  }
  if (m >= 8 && Dc.n() >= 2 && Dc.n() % 2 == 0) {
    Integer r = Dc.n() / 2;
    DivisorClass W = anticanonical_prefix(m, 8);
    if (Dc == r * W) {
      auto order = restriction_order(X, ch.frame.from_coordinates(W));
      if (order && *order == r) {
        out.kind = PencilKind::QuasiEllipticMultiple;
        out.r = r;
      }
    }
  }
  return out;
}

IntegralityReport generic_integrality(const SurfaceData& X, const DivisorClass& D, const Limits& limits) {
  IntegralityReport out;
  NefResult nef = is_nef(X, D, limits);
  if (!nef.nef) {
    out.verdict = IntegralityVerdict::NotNef;
    out.detail = nef.reason;
    return out;
  }
  const std::size_t m = X.m();
  const LatticeContext even{m, Parity::Even};
  out.verdict = IntegralityVerdict::GenericallyIntegral;
  if (D.is_zero()) {
    out.verdict = IntegralityVerdict::FixedComponentCase;
    out.detail = "the zero class has no integral member";
    return out;
  }
  if (m == 0 && X.context().parity == Parity::Odd) {
    // On an odd Hirzebruch surface only multiples of the fiber split.
    Integer r = D.d();
    if (D.n() == 0 && r > 1) {
      out.verdict = IntegralityVerdict::MultipleOfPencil;
      out.r = r;
    }
    out.chamber_form = D;
    return out;
  }
  ChamberResult ch = even_chamber(X, D, limits);
  if (!ch.success) throw Error("nef class failed to reach the chamber: " + ch.detail);
  const DivisorClass& Dc = *ch.chamber_form;
  const Frame& F = ch.frame;
  out.chamber_form = Dc;
  out.witness = ch.word;
  const Integer t = intersect(D, X.anticanonical());

  if (t >= 2) {
    if (Dc.n() == 0 && Dc.d() > 1 && Dc == Dc.d() * DivisorClass::f(even)) {
      out.verdict = IntegralityVerdict::MultipleOfPencil;
      out.r = Dc.d();
      out.detail = "multiple of the fiber class";
    }
    return out;
  }

  if (t == 0) {
    if (!X.in_kernel(D)) {
      if (D == X.anticanonical() && X.integral()) return out;
      out.verdict = IntegralityVerdict::FixedComponentCase;
      out.detail = "the anticanonical curve is a fixed component";
      return out;
    }
    if (m >= 8) {
      DivisorClass W = anticanonical_prefix(m, 8);
      if (Dc.n() >= 2 && Dc.n() % 2 == 0) {
        Integer r = Dc.n() / 2;
        if (Dc == r * W) {
          auto rp = restriction_order(X, F.from_coordinates(W));
          if (rp && *rp < r && r % *rp == 0) {
            out.verdict = IntegralityVerdict::DisjointGenusOneUnion;
            out.r = r;
            out.r_prime = *rp;
            out.detail = "union of disjoint genus one curves";
          }
          return out;
        }
      }
      if (m >= 9 && Dc.n() >= 4 && Dc.n() % 2 == 0) {
        Integer r = Dc.n() / 2;
        DivisorClass pattern = r * W;
        pattern[9] -= 1;  // + e_8
        pattern[10] += 1;  // - e_9
        if (r > 1 && Dc == pattern) {
          auto rp = restriction_order(X, F.from_coordinates(W));
          if (rp && *rp == 1) {
            out.verdict = IntegralityVerdict::FixedPlusPencil;
            out.r = r;
            out.detail = "fixed -2-curve plus a multiple of a genus one pencil";
          }
        }
      }
    }
    return out;
  }

  // t == 1
  for (std::size_t i = 1; i <= m; ++i) {
    if (Dc.r(i) != 0) continue;
    if (X.in_kernel(D - F.e(i))) {
      out.verdict = IntegralityVerdict::FixedComponentCase;
      out.detail = "the exceptional class e" + std::to_string(i) + " is a fixed component";
      return out;
    }
  }
  if (m >= 8 && Dc.n() >= 2 && Dc.n() % 2 == 0) {
    Integer r = Dc.n() / 2;
    DivisorClass W = anticanonical_prefix(m, 8);
    DivisorClass pattern = r * W;
    pattern[9] -= 1;  // + e_8
    if (Dc == pattern) {
      auto rp = restriction_order(X, F.from_coordinates(W));
      if (rp && *rp == 1) {
        out.verdict = IntegralityVerdict::FixedComponentCase;
        out.r = r;
        out.detail = "the exceptional class e8 is a fixed component";
      }
    }
  }
  return out;
}

ModuliReport moduli_report(const SurfaceData& X, const DivisorClass& D, const Integer& x,
                           const Integer& char_p, const Limits& limits) {
  IntegralityReport integ = generic_integrality(X, D, limits);
  if (integ.verdict != IntegralityVerdict::GenericallyIntegral)
    throw PreconditionError("moduli report needs a generically integral class, got " +
                            to_string(integ.verdict));
  if (!X.in_kernel(D))
    throw PreconditionError("moduli report needs a class in the kernel of the restriction map");
  if (char_p < 0) throw PreconditionError("characteristic must be nonnegative");
  ModuliReport out;
  out.dimension = intersect(D, D) + 2;
  out.divisibility_r = D.content();
  const Integer& r = out.divisibility_r;
  Integer xr = mod_floor(x, r);
  out.rational = xr == mod_floor(Integer(1), r) || xr == mod_floor(r - 1, r);
  out.separably_unirational = char_p == 0 || gcd(gcd(x, r), char_p) == 1;
  if (char_p == 0) out.unirational = true;
  return out;
}

}  // namespace ras
