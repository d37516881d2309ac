#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ras/integer.hpp"

namespace ras {

enum class Parity { Even, Odd };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);
inline Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

// Number of blown-up points and the parity of the blowdown structure. The
// lattice is Z^{m+2} with basis s, f, e_1, ..., e_m.
struct LatticeContext {
  std::size_t m = 0;
  Parity parity = Parity::Even;

  std::size_t rank() const { return m + 2; }
  Integer s_squared() const { return parity == Parity::Even ? 0 : -1; }
  friend bool operator==(const LatticeContext&, const LatticeContext&) = default;
};

// D = n s + d f - sum r_i e_i. The exceptional coefficients are stored with the
// sign flipped so that effective classes like s - e1 have r_1 = 1.
class DivisorClass {
 public:
  explicit DivisorClass(LatticeContext ctx);
  DivisorClass(LatticeContext ctx, std::vector<Integer> coeffs);
  DivisorClass(LatticeContext ctx, std::initializer_list<long long> coeffs);

  static DivisorClass s(LatticeContext ctx);
  static DivisorClass f(LatticeContext ctx);
  // i is one-based
  static DivisorClass e(LatticeContext ctx, std::size_t i);

  const LatticeContext& context() const { return ctx_; }
  std::size_t m() const { return ctx_.m; }
  Parity parity() const { return ctx_.parity; }

  const Integer& n() const { return c_[0]; }
  const Integer& d() const { return c_[1]; }
  const Integer& r(std::size_t i) const;
  // Coefficient of e_i itself, i.e. -r_i.
  Integer e_coefficient(std::size_t i) const { return -r(i); }

  std::span<const Integer> coeffs() const { return c_; }
  Integer& operator[](std::size_t k) { return c_[k]; }
  const Integer& operator[](std::size_t k) const { return c_[k]; }

  bool is_zero() const;
  Integer l1_norm() const;
  Integer content() const;  // gcd of all coefficients

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Integer& k);
  DivisorClass operator-() const;
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, DivisorClass a) { return a *= k; }
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
  }
  friend bool operator<(const DivisorClass& a, const DivisorClass& b);

  // Human readable form such as "2s+f-e1-e2".
  std::string to_string() const;

 private:
  LatticeContext ctx_;
  std::vector<Integer> c_;
};

void require_same_context(const DivisorClass& a, const DivisorClass& b);

Integer intersect(const DivisorClass& a, const DivisorClass& b);
inline Integer self_intersection(const DivisorClass& a) { return intersect(a, a); }

DivisorClass canonical_class(const LatticeContext& ctx);
DivisorClass anticanonical_class(const LatticeContext& ctx);

// Riemann-Roch: 1 + D.(D-K)/2.
Integer euler_characteristic(const DivisorClass& D);

// Re-express D after blowing down f - e_1 instead of e_1. Flips parity.
DivisorClass elementary_transform(const DivisorClass& D);

// Drop or append exceptional coordinates. Truncation requires the dropped
// coefficients to be zero unless allow_lossy is set.
DivisorClass truncate(const DivisorClass& D, std::size_t new_m, bool allow_lossy = false);
DivisorClass extend(const DivisorClass& D, std::size_t new_m);

}  // namespace ras
