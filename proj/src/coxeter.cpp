#include "ras/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ras/error.hpp"
#include "ras/frame.hpp"

namespace ras {

ReflectionWord ReflectionWord::from_steps(const std::vector<SimpleRootIndex>& steps) {
  return ReflectionWord{std::vector<SimpleRootIndex>(steps.rbegin(), steps.rend())};
}

std::vector<SimpleRootIndex> ReflectionWord::steps() const {
  return std::vector<SimpleRootIndex>(letters.rbegin(), letters.rend());
}

std::size_t simple_root_count(const LatticeContext& ctx) { return Frame(ctx).simple_root_count(); }

DivisorClass simple_root(const LatticeContext& ctx, SimpleRootIndex i) {
  return Frame(ctx).simple_root(i);
}

std::vector<DivisorClass> simple_roots(const LatticeContext& ctx) {
  Frame F(ctx);
  std::vector<DivisorClass> out;
  for (std::size_t i = 0; i < F.simple_root_count(); ++i) out.push_back(F.simple_root(i));
  return out;
}

DivisorClass reflect(const DivisorClass& D, const DivisorClass& sigma) {
  return D + intersect(D, sigma) * sigma;
}

DivisorClass apply_word(const DivisorClass& D, const ReflectionWord& w) {
  const auto roots = simple_roots(D.context());
  DivisorClass out = D;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (*it >= roots.size()) throw PreconditionError("reflection letter out of range");
    out = reflect(out, roots[*it]);
  }
  return out;
}

bool roots_adjacent(const LatticeContext& ctx, SimpleRootIndex i, SimpleRootIndex j) {
  if (i == j) return false;
  return intersect(simple_root(ctx, i), simple_root(ctx, j)) != 0;
}

std::vector<Integer> expand_in_root_basis(const DivisorClass& D) {
  const std::size_t m = D.m();
  if (m < 2) throw PreconditionError("root basis expansion needs m >= 2");
  std::vector<Integer> c(m + 2);
  const Integer& n = D.n();
  const Integer& d = D.d();
  // Solve the triangular system column by column.
  Integer b;
  Integer c1;
  c[0] = n;
  if (D.parity() == Parity::Even) {
    b = n + d;
    c1 = b - D.r(1);
  } else {
    b = d;
    c1 = n + b - D.r(1);
  }
  c[1] = b;
  // c_i is the coefficient of e_i - e_{i+1} for i < m and of e_m for i = m.
  std::vector<Integer> ci(m + 1);
  ci[1] = c1;
  ci[2] = b + c1 - D.r(2);
  for (std::size_t i = 3; i <= m; ++i) ci[i] = ci[i - 1] - D.r(i);
  for (std::size_t i = 1; i <= m; ++i) c[i + 1] = ci[i];
  return c;
}

std::vector<DivisorClass> root_orbit(std::size_t m, Parity parity) {
  if (m > 7) throw PreconditionError("root orbit is infinite for m >= 8");
  LatticeContext ctx{m, parity};
  const auto roots = simple_roots(ctx);
  std::set<DivisorClass> seen(roots.begin(), roots.end());
  std::deque<DivisorClass> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    DivisorClass x = queue.front();
    queue.pop_front();
    for (const auto& sigma : roots) {
      DivisorClass y = reflect(x, sigma);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<DivisorClass>(seen.begin(), seen.end());
}

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::RealPositive: return "RealPositive";
    case RootKind::RealNegative: return "RealNegative";
    case RootKind::Imaginary: return "Imaginary";
    case RootKind::NotARoot: return "NotARoot";
  }
  return "NotARoot";
}

std::size_t default_step_budget(const DivisorClass& D) {
  Integer L = D.l1_norm();
  Integer budget = 10 * (1 + L) * (1 + L);
  Integer floor = 4 * Integer(D.m() + 2) * Integer(D.m() + 2);
  if (budget < floor) budget = floor;
  if (budget > Integer(100000000)) return 100000000;
  return static_cast<std::size_t>(budget);
}

namespace {

enum class WalkEnd { Simple, Chamber, LeftPositiveCone };

// Walk D down by reflections while it stays a nonnegative combination of
// simple roots. Heights drop at every step, so this terminates.
WalkEnd positive_walk(DivisorClass D, std::vector<SimpleRootIndex>& steps, std::size_t budget) {
  const auto roots = simple_roots(D.context());
  Frame F(D.context());
  for (std::size_t iter = 0;; ++iter) {
    if (iter > budget) throw IterationLimit("root classification exceeded its step budget", steps);
    for (const auto& sigma : roots)
      if (D == sigma) return WalkEnd::Simple;
    auto coeffs = expand_in_root_basis(D);
    for (const auto& c : coeffs)
      if (c < 0) return WalkEnd::LeftPositiveCone;
    auto idx = F.first_negative_root(D);
    if (!idx) return WalkEnd::Chamber;
    steps.push_back(*idx);
    D = reflect(D, roots[*idx]);
  }
}

}  // namespace

RootClassification classify_root(const DivisorClass& D, std::size_t max_steps) {
  RootClassification out;
  if (intersect(D, canonical_class(D.context())) != 0 || D.is_zero()) return out;
  const std::size_t budget = max_steps ? max_steps : default_step_budget(D);
  if (D.m() < 2) {
    // The orthogonal complement of K is negative definite here and the only
    // roots are plus or minus the simple roots.
    for (const auto& sigma : simple_roots(D.context())) {
      if (D == sigma) out.kind = RootKind::RealPositive;
      if (D == -sigma) {
        out.kind = RootKind::RealNegative;
        out.negated = true;
      }
    }
    return out;
  }
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<SimpleRootIndex> steps;
    WalkEnd end = positive_walk(pass == 0 ? D : -D, steps, budget);
    if (end == WalkEnd::LeftPositiveCone) continue;
    out.witness = ReflectionWord::from_steps(steps);
    out.negated = pass == 1;
    if (end == WalkEnd::Simple)
      out.kind = pass == 0 ? RootKind::RealPositive : RootKind::RealNegative;
    else
      out.kind = RootKind::Imaginary;
    return out;
  }
  return out;
}

}  // namespace ras
