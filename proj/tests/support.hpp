#pragma once

// Surfaces and brute-force helpers shared by the unit tests and the
// acceptance runner.

#include <functional>
#include <random>
#include <vector>

#include "ras/classify.hpp"
#include "ras/surface.hpp"

namespace ras::testing {

inline LatticeContext even(std::size_t m) { return LatticeContext{m, Parity::Even}; }
inline LatticeContext odd(std::size_t m) { return LatticeContext{m, Parity::Odd}; }

inline DivisorClass cls(LatticeContext ctx, std::initializer_list<long long> c) {
  return DivisorClass(ctx, c);
}

// Generic surface with the images of two basis vectors identified, which puts
// their difference in the kernel.
inline SurfaceData identify_images(const SurfaceData& X, std::size_t a, std::size_t b) {
  auto imgs = X.images();
  imgs[b] = imgs[a];
  return X.with_images(X.pic0(), imgs);
}

// s and f share an image, so s - f is a -2-curve: the surface blows up F_2.
inline SurfaceData f2_based(std::size_t m) { return identify_images(SurfaceData::generic(even(m)), 0, 1); }

// e_1 and e_2 share an image: the second point is infinitely near the first.
inline SurfaceData coincident_points(std::size_t m) {
  return identify_images(SurfaceData::generic(even(m)), 2, 3);
}

// m = 8 surface whose restriction of -K has exact order r in a Z/r summand.
// Pic^0 = Z^9 + Z/r; s, f, e_1..e_7 map to free generators and e_8 is chosen so
// that restriction(-K) is minus the torsion generator.
inline SurfaceData anticanonical_torsion(long long r) {
  const LatticeContext ctx = even(8);
  std::vector<Integer> tors;
  if (r > 1) tors.push_back(r);
  AbGroup G(9, tors);
  std::vector<AbGroup::Element> imgs;
  for (std::size_t i = 0; i < 9; ++i) imgs.push_back(G.generator(i));
  AbGroup::Element e8 = G.zero();
  e8[0] = 2;
  e8[1] = 2;
  for (std::size_t i = 2; i < 9; ++i) e8[i] = -1;
  if (r > 1) e8[9] = 1;
  imgs.push_back(G.reduce(e8));
  return SurfaceData(ctx, {Component{anticanonical_class(ctx), 1}}, CurveTypeTag{}, G, imgs);
}

// m = 8 surface symmetric in e_1..e_8 with restriction(-K) of order 3:
// Pic^0 = Z/3 + Z, s -> (0; 1), f -> (0; 3), e_i -> (1; 1).
inline SurfaceData symmetric_torsion3() {
  const LatticeContext ctx = even(8);
  AbGroup G(1, {3});
  std::vector<AbGroup::Element> imgs = {{1, 0}, {3, 0}};
  for (int i = 0; i < 8; ++i) imgs.push_back({1, 1});
  return SurfaceData(ctx, {Component{anticanonical_class(ctx), 1}}, CurveTypeTag{}, G, imgs);
}

// Visit every class of the lattice with coefficients in [lo, hi].
inline void for_each_class(LatticeContext ctx, long long lo, long long hi,
                           const std::function<void(const DivisorClass&)>& fn) {
  std::vector<Integer> c(ctx.rank(), Integer(lo));
  for (;;) {
    fn(DivisorClass(ctx, c));
    std::size_t k = 0;
    while (k < c.size() && c[k] == hi) c[k++] = lo;
    if (k == c.size()) return;
    c[k] += 1;
  }
}

// Brute-force count of real roots with bounded coefficients, straight from
// D.D = -2 and D.K = 0. Even parity: sum r = 2n + 2d and sum r^2 = 2nd + 2.
inline std::size_t brute_force_root_count(std::size_t m, long long bound) {
  std::size_t count = 0;
  std::vector<long long> r(m, -bound);
  for (long long n = -bound; n <= bound; ++n)
    for (long long d = -bound; d <= bound; ++d) {
      std::fill(r.begin(), r.end(), -bound);
      for (;;) {
        long long s1 = 0, s2 = 0;
        for (long long x : r) {
          s1 += x;
          s2 += x * x;
        }
        if (s1 == 2 * n + 2 * d && s2 == 2 * n * d + 2) ++count;
        std::size_t k = 0;
        while (k < m && r[k] == bound) r[k++] = -bound;
        if (k == m) break;
        ++r[k];
      }
    }
  return count;
}

inline DivisorClass random_class(std::mt19937_64& rng, LatticeContext ctx, long long bound) {
  std::uniform_int_distribution<long long> dist(-bound, bound);
  std::vector<Integer> c;
  for (std::size_t i = 0; i < ctx.rank(); ++i) c.push_back(dist(rng));
  return DivisorClass(ctx, c);
}

}  // namespace ras::testing
