#include <doctest.h>

#include <random>
#include <set>

#include "ras/classify.hpp"
#include "ras/enumerate.hpp"
#include "ras/error.hpp"
#include "support.hpp"

using namespace ras;
using namespace ras::testing;

namespace {

DivisorClass beta_class(std::size_t mp) {
  const auto ctx = even(2 * mp + 4);
  DivisorClass D(ctx);
  D[0] = static_cast<long long>(mp) + 1;
  D[1] = 1;
  for (std::size_t i = 1; i <= 2 * mp + 4; ++i) D[i + 1] = 1;
  return D;
}

// Generic surface with D forced into the kernel.
SurfaceData balanced(const DivisorClass& D) { return SurfaceData::generic(D.context()).with_kernel_relation(D); }

void check_decomposition(const SurfaceData& X, const DivisorClass& D, const EffectiveDecomposition& dec) {
  CHECK(dec.total(X.context()) == D);
  for (const auto& p : dec.parts) {
    CHECK(p.coefficient > 0);
    if (p.kind == PartKind::MinusDCurve) {
      CHECK(self_intersection(p.cls) == -p.self_intersection_negated);
      if (p.self_intersection_negated == 1) CHECK(is_minus_one_class(X, p.cls).accepted);
      if (p.self_intersection_negated == 2) CHECK(is_minus_two_class(X, p.cls).accepted);
    }
  }
}

}  // namespace

TEST_CASE("-1-curve test") {
  for (std::size_t m = 1; m <= 6; ++m) {
    auto X = SurfaceData::generic(even(m));
    CHECK(is_minus_one_class(X, DivisorClass::e(X.context(), m)).accepted);
  }
  auto X = SurfaceData::generic(even(2));
  DivisorClass se1 = cls(even(2), {1, 0, 1, 0});
  auto t = is_minus_one_class(X, se1);
  CHECK(t.accepted);
  // s - e_1 -> f - e_1 -> e_2
  CHECK(t.witness.steps() == std::vector<SimpleRootIndex>{0, 1});
  CHECK(apply_word(se1, t.witness) == DivisorClass::e(even(2), 2));

  CHECK(!is_minus_one_class(f2_based(2), se1).accepted);
  CHECK(is_minus_one_class(f2_based(2), cls(even(2), {0, 1, 1, 0})).accepted);
  CHECK(!is_minus_one_class(X, DivisorClass::f(even(2))).accepted);  // numerically wrong
  // e_1 is reducible once e_2 lies on it.
  CHECK(!is_minus_one_class(coincident_points(2), DivisorClass::e(even(2), 1)).accepted);
  CHECK(is_minus_one_class(coincident_points(2), DivisorClass::e(even(2), 2)).accepted);
}

TEST_CASE("-1-curves on generic surfaces are the orbit of e_m") {
  const std::vector<std::size_t> count = {3, 6, 10, 16};
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto ctx = even(m);
    auto X = SurfaceData::generic(ctx);
    std::set<DivisorClass> accepted;
    for_each_class(ctx, -2, 2, [&](const DivisorClass& E) {
      if (is_minus_one_class(X, E).accepted) accepted.insert(E);
    });
    CHECK(accepted.size() == count[m - 1]);
    if (m >= 2) {
      auto orbit = weyl_orbit(DivisorClass::e(ctx, m));
      CHECK(accepted == std::set<DivisorClass>(orbit.begin(), orbit.end()));
    }
  }
}

TEST_CASE("-2-curve test") {
  const auto ctx = even(3);
  DivisorClass r12 = DivisorClass::e(ctx, 1) - DivisorClass::e(ctx, 2);
  CHECK(is_minus_two_class(coincident_points(3), r12).accepted);
  CHECK(!is_minus_two_class(SurfaceData::generic(ctx), r12).accepted);
  CHECK(!is_minus_two_class(SurfaceData::generic(ctx), DivisorClass::e(ctx, 1)).accepted);

  DivisorClass D = cls(even(6), {2, 1, 1, 1, 1, 1, 1, 1});
  auto t = is_minus_two_class(balanced(D), D);
  CHECK(t.accepted);
  REQUIRE(!t.witness.empty());
  CHECK(t.witness.steps().front() == 0);
  CHECK(!is_minus_two_class(SurfaceData::generic(even(6)), D).accepted);
  // f - e_1 - e_2 + e_1 - e_2 style sums are reducible: e_1 - e_3 with e_1 = e_2 = e_3.
  auto Y = identify_images(coincident_points(3), 2, 4);
  CHECK(is_minus_two_class(Y, r12).accepted);
  CHECK(!is_minus_two_class(Y, DivisorClass::e(ctx, 1) - DivisorClass::e(ctx, 3)).accepted);
}

TEST_CASE("chamber walk") {
  auto X = SurfaceData::generic(even(2));
  DivisorClass f = DivisorClass::f(even(2));
  auto r = reduce_to_chamber(X, f);
  CHECK(r.success);
  CHECK(*r.chamber_form == f);
  CHECK(r.word.empty());
  for (const auto& sigma : simple_roots(even(2))) CHECK(intersect(f, sigma) >= 0);

  auto neg = reduce_to_chamber(X, -DivisorClass::s(even(2)));
  CHECK(!neg.success);
  CHECK(neg.failure == ChamberFailure::NegativeFiber);

  auto em = reduce_to_chamber(X, DivisorClass::e(even(2), 2));
  CHECK(!em.success);
  CHECK(em.failure == ChamberFailure::NegativeLastExceptional);

  // A root that must cross the effective s - f.
  auto bad = reduce_to_chamber(f2_based(2), cls(even(2), {0, 1, 1, 0}) + cls(even(2), {1, 0, 0, 0}));
  CHECK((bad.success || bad.failure == ChamberFailure::EffectiveRoot));
}

TEST_CASE("nefness") {
  for (std::size_t m : {0, 1, 2, 5}) {
    auto X = SurfaceData::generic(even(m));
    CHECK(is_nef(X, DivisorClass::f(X.context())).nef);
    if (m >= 1) CHECK(!is_nef(X, DivisorClass::e(X.context(), m)).nef);
  }
  CHECK(is_nef(anticanonical_torsion(3), anticanonical_class(even(8))).nef);
  CHECK(!is_nef(SurfaceData::generic(even(9)), anticanonical_class(even(9))).nef);
  // s + f is nef on F_0 but not on F_2, where s - f is a curve.
  CHECK(is_nef(SurfaceData::generic(even(0)), cls(even(0), {1, 0})).nef);
  CHECK(!is_nef(f2_based(0), cls(even(0), {1, 0})).nef);
  CHECK(is_nef(f2_based(0), cls(even(0), {1, 1})).nef);
}

TEST_CASE("effectiveness") {
  auto X = SurfaceData::generic(even(2));
  auto r = is_effective(X, cls(even(2), {0, 0, -1, 1}));
  CHECK(!r.effective);
  CHECK(r.reason == "negative degree on the fiber class");

  auto Y = f2_based(2);
  DivisorClass smf = cls(even(2), {1, -1, 0, 0});
  auto e = is_effective(Y, smf);
  CHECK(e.effective);
  REQUIRE(e.decomposition.parts.size() == 1);
  CHECK(e.decomposition.parts[0].cls == smf);
  CHECK(e.decomposition.parts[0].coefficient == 1);
  CHECK(e.decomposition.parts[0].kind == PartKind::MinusDCurve);
  CHECK(e.decomposition.parts[0].self_intersection_negated == 2);

  for (std::size_t m = 2; m <= 5; ++m) {
    auto Z = SurfaceData::generic(even(m));
    auto ef = is_effective(Z, DivisorClass::f(even(m)));
    CHECK(ef.effective);
    check_decomposition(Z, DivisorClass::f(even(m)), ef.decomposition);
  }
}

TEST_CASE("nef decomposition") {
  auto X = SurfaceData::generic(even(3));
  CHECK(decompose_nef(X, DivisorClass(even(3))).parts.empty());

  auto T = anticanonical_torsion(1);
  auto dec = decompose_nef(T, anticanonical_class(even(8)));
  REQUIRE(dec.parts.size() == 1);
  CHECK(dec.parts[0].kind == PartKind::Anticanonical);
  CHECK(dec.parts[0].coefficient == 1);
  CHECK(dec.parts[0].cls == anticanonical_class(even(8)));

  auto F2 = f2_based(1);
  DivisorClass sf = cls(even(1), {1, 1, 0});
  REQUIRE(is_nef(F2, sf).nef);
  auto d2 = decompose_nef(F2, sf);
  CHECK(d2.total(even(1)) == sf);
  std::set<DivisorClass> gens{cls(even(1), {1, -1, 0}), cls(even(1), {0, 1, 1}), DivisorClass::e(even(1), 1)};
  for (const auto& p : d2.parts) CHECK(gens.count(p.cls) == 1);
}

TEST_CASE("global sections") {
  auto X = SurfaceData::generic(even(4));
  CHECK(h0(X, DivisorClass(even(4))) == 1);
  CHECK(h0(X, DivisorClass::f(even(4))) == 2);
  CHECK(h0(X, cls(even(4), {0, 0, -1, 1, 0, 0})) == 0);
  CHECK(h0(SurfaceData::generic(even(0)), cls(even(0), {2, 3})) == 12);
  CHECK(h0(anticanonical_torsion(3), Integer(6) * anticanonical_class(even(8))) == 3);
  // A -1-curve has exactly one section.
  CHECK(h0(X, DivisorClass::e(even(4), 2)) == 1);
}

TEST_CASE("pencils") {
  auto X = SurfaceData::generic(even(3));
  CHECK(classify_pencil(X, DivisorClass::f(even(3))).kind == PencilKind::FiberClass);
  CHECK(classify_pencil(X, cls(even(3), {1, 0, 0, 0, 0})).kind == PencilKind::FiberClass);
  CHECK(classify_pencil(X, cls(even(3), {1, 1, 0, 0, 0})).kind == PencilKind::NotAPencil);

  const DivisorClass mK = anticanonical_class(even(8));
  auto q1 = classify_pencil(anticanonical_torsion(1), mK);
  CHECK(q1.kind == PencilKind::QuasiEllipticMultiple);
  CHECK(q1.r == 1);
  auto T2 = anticanonical_torsion(2);
  auto q2 = classify_pencil(T2, Integer(2) * mK);
  CHECK(q2.kind == PencilKind::QuasiEllipticMultiple);
  CHECK(q2.r == 2);
  CHECK(classify_pencil(T2, mK).kind == PencilKind::NotAPencil);

  DivisorClass seven = cls(even(7), {2, 2, 1, 1, 1, 1, 1, 1, 1});
  CHECK(classify_pencil(SurfaceData::generic(even(7)), seven).kind == PencilKind::SevenPointPencil);
}

TEST_CASE("generic integrality") {
  auto X = SurfaceData::generic(even(3));
  auto r = generic_integrality(X, Integer(3) * DivisorClass::f(even(3)));
  CHECK(r.verdict == IntegralityVerdict::MultipleOfPencil);
  CHECK(r.r == 3);
  CHECK(generic_integrality(X, cls(even(3), {1, 1, 0, 0, 0})).verdict == IntegralityVerdict::GenericallyIntegral);
  CHECK(generic_integrality(X, DivisorClass::e(even(3), 1)).verdict == IntegralityVerdict::NotNef);

  auto T2 = anticanonical_torsion(2);
  auto u = generic_integrality(T2, Integer(4) * anticanonical_class(even(8)));
  CHECK(u.verdict == IntegralityVerdict::DisjointGenusOneUnion);
  CHECK(u.r == 4);
  CHECK(u.r_prime == 2);
  CHECK(generic_integrality(T2, Integer(2) * anticanonical_class(even(8))).verdict ==
        IntegralityVerdict::GenericallyIntegral);

  DivisorClass D10 = cls(even(10), {2, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(generic_integrality(balanced(D10), D10).verdict == IntegralityVerdict::GenericallyIntegral);
}

TEST_CASE("moduli report") {
  auto T1 = anticanonical_torsion(1);
  auto m = moduli_report(T1, anticanonical_class(even(8)), 5);
  CHECK(m.dimension == 2);
  CHECK(m.divisibility_r == 1);

  DivisorClass D10 = cls(even(10), {2, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  auto r = moduli_report(balanced(D10), D10, 1);
  CHECK(r.rational);
  CHECK(r.divisibility_r == 1);
  CHECK(r.dimension == self_intersection(D10) + 2);

  auto T2 = anticanonical_torsion(2);
  DivisorClass D = Integer(2) * anticanonical_class(even(8));
  auto q = moduli_report(T2, D, 2);
  CHECK(q.divisibility_r == 2);
  CHECK(!q.rational);
  CHECK(q.separably_unirational);
  CHECK(q.unirational.value_or(false));
  auto qp = moduli_report(T2, D, 2, 2);
  CHECK(!qp.separably_unirational);
  CHECK(!qp.unirational.has_value());
  CHECK(moduli_report(T2, D, 3, 2).separably_unirational);

  CHECK_THROWS_AS(moduli_report(SurfaceData::generic(even(3)), DivisorClass::f(even(3)), 0), PreconditionError);
}

TEST_CASE("curve tests honour the step budget") {
  DivisorClass D = beta_class(4);
  CHECK_THROWS_AS(is_minus_two_class(balanced(D), D, Limits{1}), IterationLimit);
}

TEST_CASE("consistency between effectiveness, sections and nefness") {
  for (auto X : {SurfaceData::generic(even(2)), f2_based(2), coincident_points(3), SurfaceData::generic(odd(2))}) {
    for_each_class(X.context(), -2, 2, [&](const DivisorClass& D) {
      auto e = is_effective(X, D);
      Integer h = h0(X, D);
      CHECK(e.effective == (h >= 1));
      if (e.effective) check_decomposition(X, D, e.decomposition);
      if (is_nef(X, D).nef) CHECK(e.effective);
    });
  }
}
