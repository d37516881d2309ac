#include <doctest.h>

#include <random>
#include <set>

#include "ras/coxeter.hpp"
#include "ras/error.hpp"
#include "support.hpp"

using namespace ras;
using namespace ras::testing;

TEST_CASE("simple roots") {
  CHECK(simple_root(even(2), 0) == cls(even(2), {1, -1, 0, 0}));
  CHECK(simple_root(odd(2), 0) == cls(odd(2), {1, 0, 1, 0}));
  CHECK(simple_root(even(3), 1) == cls(even(3), {0, 1, 1, 1, 0}));
  CHECK(simple_root(even(3), 3) == cls(even(3), {0, 0, 0, -1, 1}));
  CHECK(simple_root_count(even(5)) == 6);
  CHECK(simple_root_count(even(1)) == 1);
  CHECK(simple_root_count(odd(1)) == 1);
  CHECK(simple_root(odd(1), 0) == cls(odd(1), {1, 0, 1}));
  CHECK(simple_root_count(even(0)) == 1);
  CHECK(simple_root_count(odd(0)) == 0);
  CHECK_THROWS(simple_root(even(3), 4));

  for (std::size_t m = 0; m <= 10; ++m)
    for (auto ctx : {even(m), odd(m)})
      for (const auto& sigma : simple_roots(ctx)) {
        CHECK(self_intersection(sigma) == -2);
        CHECK(intersect(sigma, canonical_class(ctx)) == 0);
      }
}

TEST_CASE("Dynkin diagram of E_{m+1}") {
  const auto ctx = even(6);
  std::size_t edges = 0;
  for (std::size_t i = 0; i <= 6; ++i)
    for (std::size_t j = i + 1; j <= 6; ++j)
      if (roots_adjacent(ctx, i, j)) {
        ++edges;
        CHECK(intersect(simple_root(ctx, i), simple_root(ctx, j)) == 1);
      }
  CHECK(edges == 6);  // a tree on seven nodes
}

TEST_CASE("reflection examples") {
  const auto E2 = even(2);
  CHECK(reflect(DivisorClass::s(E2), simple_root(E2, 0)) == DivisorClass::f(E2));
  CHECK(reflect(DivisorClass::e(E2, 1), simple_root(E2, 2)) == DivisorClass::e(E2, 2));
  for (const auto& sigma : simple_roots(even(7))) CHECK(reflect(canonical_class(even(7)), sigma) == canonical_class(even(7)));
}

TEST_CASE("words apply right to left") {
  const auto E2 = even(2);
  ReflectionWord w{{1, 0}};  // reflect in sigma_0 first, then sigma_1
  DivisorClass D = DivisorClass::s(E2) - DivisorClass::e(E2, 1);
  DivisorClass step1 = reflect(D, simple_root(E2, 0));
  CHECK(step1 == DivisorClass::f(E2) - DivisorClass::e(E2, 1));
  CHECK(apply_word(D, w) == reflect(step1, simple_root(E2, 1)));
  CHECK(apply_word(D, w) == DivisorClass::e(E2, 2));
  CHECK(w.steps() == std::vector<SimpleRootIndex>{0, 1});
  CHECK(ReflectionWord::from_steps({0, 1}) == w);
}

TEST_CASE("root classification") {
  const auto E3 = even(3);
  CHECK(classify_root(cls(E3, {0, 0, -1, 1, 0})).kind == RootKind::RealPositive);
  CHECK(classify_root(cls(E3, {0, 0, 1, -1, 0})).kind == RootKind::RealNegative);
  CHECK(classify_root(DivisorClass::e(E3, 1)).kind == RootKind::NotARoot);
  CHECK(classify_root(DivisorClass(E3)).kind == RootKind::NotARoot);

  const auto E8 = even(8);
  DivisorClass minusK = anticanonical_class(E8);
  for (const auto& sigma : simple_roots(E8)) CHECK(intersect(minusK, sigma) == 0);
  CHECK(classify_root(minusK).kind == RootKind::Imaginary);
  CHECK(classify_root(-minusK).kind == RootKind::Imaginary);
  CHECK(classify_root(-minusK).negated);

  // 2s + f - e_1 - ... - e_6 is a positive real root.
  auto r = classify_root(cls(even(6), {2, 1, 1, 1, 1, 1, 1, 1}));
  CHECK(r.kind == RootKind::RealPositive);
  DivisorClass reduced = apply_word(cls(even(6), {2, 1, 1, 1, 1, 1, 1, 1}), r.witness);
  bool simple = false;
  for (const auto& sigma : simple_roots(even(6))) simple = simple || reduced == sigma;
  CHECK(simple);

  // m <= 1: only plus or minus the simple root.
  CHECK(classify_root(simple_root(even(1), 0)).kind == RootKind::RealPositive);
  CHECK(classify_root(-simple_root(odd(1), 0)).kind == RootKind::RealNegative);
}

TEST_CASE("classification is stable under reflection in other simple roots") {
  const auto E6 = even(6);
  for (const auto& alpha : root_orbit(6, Parity::Even)) {
    auto k = classify_root(alpha).kind;
    REQUIRE((k == RootKind::RealPositive || k == RootKind::RealNegative));
    for (const auto& sigma : simple_roots(E6)) {
      if (alpha == sigma || alpha == -sigma) continue;
      CHECK(classify_root(reflect(alpha, sigma)).kind == k);
    }
  }
}

TEST_CASE("expansion in the root basis") {
  const auto E4 = even(4);
  auto c = expand_in_root_basis(DivisorClass::e(E4, 4));
  CHECK(c == std::vector<Integer>{0, 0, 0, 0, 0, 1});

  for (std::size_t m = 2; m <= 9; ++m)
    for (auto ctx : {even(m), odd(m)}) {
      auto k = expand_in_root_basis(canonical_class(ctx));
      CHECK(k.back() == Integer(m) - 8);
    }

  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t m = 2 + t % 8;
    const auto ctx = t % 2 ? odd(m) : even(m);
    DivisorClass D = random_class(rng, ctx, 8);
    auto coeff = expand_in_root_basis(D);
    DivisorClass rebuilt(ctx);
    for (std::size_t i = 0; i <= m; ++i) rebuilt += coeff[i] * simple_root(ctx, i);
    rebuilt += coeff[m + 1] * DivisorClass::e(ctx, m);
    CHECK(rebuilt == D);
    CHECK(coeff[m + 1] == intersect(D, anticanonical_class(ctx)));
  }
  CHECK_THROWS_AS(expand_in_root_basis(DivisorClass::s(even(1))), PreconditionError);
}

TEST_CASE("finite root systems match a brute-force count") {
  const std::vector<std::size_t> expect = {8, 20, 40, 72, 126, 240};
  for (std::size_t m = 2; m <= 7; ++m) {
    CHECK(root_orbit(m, Parity::Even).size() == expect[m - 2]);
    CHECK(root_orbit(m, Parity::Odd).size() == expect[m - 2]);
    // Roots of E_8 have coefficients at most 3 in absolute value in this basis.
    CHECK(brute_force_root_count(m, 3) == expect[m - 2]);
  }
  CHECK_THROWS_AS(root_orbit(8, Parity::Even), PreconditionError);
}

TEST_CASE("step budget") {
  const auto E2 = even(2);
  CHECK(default_step_budget(DivisorClass(E2)) >= 10);
  DivisorClass D = cls(E2, {3, 0, 0, 0});
  CHECK(default_step_budget(D) >= 160);
  // A long positive root of the infinite system needs more than one step.
  const auto E9 = even(9);
  DivisorClass alpha = simple_root(E9, 2);
  for (int t = 0; t < 200; ++t) {
    auto roots = simple_roots(E9);
    for (const auto& sigma : roots)
      if (intersect(alpha, sigma) > 0) {
        alpha = reflect(alpha, sigma);
        break;
      }
  }
  REQUIRE(alpha.l1_norm() > 20);
  CHECK(classify_root(alpha).kind == RootKind::RealPositive);
  CHECK_THROWS_AS(classify_root(alpha, 1), IterationLimit);
}
