#include "ras/picard.hpp"

#include <algorithm>
#include <sstream>

#include "ras/error.hpp"

namespace ras {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw ValidationError("parity must be \"even\" or \"odd\", got \"" + s + "\"");
}

DivisorClass::DivisorClass(LatticeContext ctx) : ctx_(ctx), c_(ctx.rank()) {}

DivisorClass::DivisorClass(LatticeContext ctx, std::vector<Integer> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
  if (c_.size() != ctx_.rank())
    throw ContextMismatch("class has " + std::to_string(c_.size()) + " coefficients but m = " +
                          std::to_string(ctx_.m) + " needs " + std::to_string(ctx_.rank()));
}

DivisorClass::DivisorClass(LatticeContext ctx, std::initializer_list<long long> coeffs)
    : DivisorClass(ctx, std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

DivisorClass DivisorClass::s(LatticeContext ctx) {
  DivisorClass D(ctx);
  D.c_[0] = 1;
  return D;
}

DivisorClass DivisorClass::f(LatticeContext ctx) {
  DivisorClass D(ctx);
  D.c_[1] = 1;
  return D;
}

DivisorClass DivisorClass::e(LatticeContext ctx, std::size_t i) {
  if (i < 1 || i > ctx.m) throw PreconditionError("exceptional index out of range");
  DivisorClass D(ctx);
  D.c_[i + 1] = -1;
  return D;
}

const Integer& DivisorClass::r(std::size_t i) const {
  if (i < 1 || i > ctx_.m) throw PreconditionError("exceptional index out of range");
  return c_[i + 1];
}

bool DivisorClass::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x == 0; });
}

Integer DivisorClass::l1_norm() const {
  Integer t = 0;
  for (const auto& x : c_) t += abs_value(x);
  return t;
}

Integer DivisorClass::content() const {
  Integer g = 0;
  for (const auto& x : c_) g = gcd(g, x);
  return g;
}

void require_same_context(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.context() == b.context()))
    throw ContextMismatch("classes live in different lattices (m=" + std::to_string(a.m()) + "/" +
                          to_string(a.parity()) + " vs m=" + std::to_string(b.m()) + "/" +
                          to_string(b.parity()) + ")");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  require_same_context(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  require_same_context(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Integer& k) {
  for (auto& x : c_) x *= k;
  return *this;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass D = *this;
  for (auto& x : D.c_) x = -x;
  return D;
}

bool operator<(const DivisorClass& a, const DivisorClass& b) {
  if (a.ctx_.m != b.ctx_.m) return a.ctx_.m < b.ctx_.m;
  if (a.ctx_.parity != b.ctx_.parity) return a.ctx_.parity < b.ctx_.parity;
  return a.c_ < b.c_;
}

std::string DivisorClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](Integer coef, const std::string& name) {
    if (coef == 0) return;
    if (coef < 0) {
      out << '-';
      coef = -coef;
    } else if (!first) {
      out << '+';
    }
    if (coef != 1) out << coef;
    out << name;
    first = false;
  };
  term(c_[0], "s");
  term(c_[1], "f");
  for (std::size_t i = 1; i <= ctx_.m; ++i) term(-c_[i + 1], "e" + std::to_string(i));
  if (first) return "0";
  return out.str();
}

Integer intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_context(a, b);
  Integer t = a.n() * b.d() + a.d() * b.n();
  if (a.parity() == Parity::Odd) t -= a.n() * b.n();
  for (std::size_t i = 1; i <= a.m(); ++i) t -= a.r(i) * b.r(i);
  return t;
}

DivisorClass canonical_class(const LatticeContext& ctx) {
  DivisorClass K(ctx);
  K[0] = -2;
  K[1] = ctx.parity == Parity::Even ? -2 : -3;
  for (std::size_t i = 1; i <= ctx.m; ++i) K[i + 1] = -1;
  return K;
}

DivisorClass anticanonical_class(const LatticeContext& ctx) { return -canonical_class(ctx); }

Integer euler_characteristic(const DivisorClass& D) {
  DivisorClass K = canonical_class(D.context());
  Integer t = intersect(D, D - K);
  return 1 + t / 2;  // D.(D-K) is always even
}

DivisorClass elementary_transform(const DivisorClass& D) {
  if (D.m() < 1) throw PreconditionError("elementary transformation needs m >= 1");
  LatticeContext out{D.m(), flip(D.parity())};
  std::vector<Integer> c(D.coeffs().begin(), D.coeffs().end());
  const Integer n = D.n(), d = D.d(), r1 = D.r(1);
  if (D.parity() == Parity::Even)
    c[1] = d - r1 + n;
  else
    c[1] = d - r1;
  c[2] = n - r1;
  return DivisorClass(out, std::move(c));
}

DivisorClass truncate(const DivisorClass& D, std::size_t new_m, bool allow_lossy) {
  if (new_m > D.m()) throw PreconditionError("truncate cannot increase m");
  if (!allow_lossy)
    for (std::size_t i = new_m + 1; i <= D.m(); ++i)
      if (D.r(i) != 0) throw PreconditionError("truncation would drop a nonzero coefficient");
  std::vector<Integer> c(D.coeffs().begin(), D.coeffs().begin() + static_cast<long>(new_m + 2));
  return DivisorClass(LatticeContext{new_m, D.parity()}, std::move(c));
}

DivisorClass extend(const DivisorClass& D, std::size_t new_m) {
  if (new_m < D.m()) throw PreconditionError("extend cannot decrease m");
  std::vector<Integer> c(D.coeffs().begin(), D.coeffs().end());
  c.resize(new_m + 2);
  return DivisorClass(LatticeContext{new_m, D.parity()}, std::move(c));
}

}  // namespace ras
