#include "ras/frame.hpp"

#include "ras/error.hpp"

namespace ras {

Frame::Frame(LatticeContext ambient)
    : ambient_(ambient),
      parity_(ambient.parity),
      s_(DivisorClass::s(ambient)),
      f_(DivisorClass::f(ambient)) {
  e_.reserve(ambient.m);
  for (std::size_t i = 1; i <= ambient.m; ++i) e_.push_back(DivisorClass::e(ambient, i));
}

std::size_t Frame::simple_root_count() const {
  if (m() >= 2) return m() + 1;
  if (m() == 1) return 1;
  return parity_ == Parity::Even ? 1 : 0;
}

DivisorClass Frame::simple_root(std::size_t i) const {
  if (i >= simple_root_count()) throw PreconditionError("simple root index out of range");
  if (i == 0) return parity_ == Parity::Even ? s_ - f_ : s_ - e_[0];
  if (i == 1) return f_ - e_[0] - e_[1];
  return e_[i - 2] - e_[i - 1];
}

namespace {
void reflect_in_place(DivisorClass& b, const DivisorClass& sigma) {
  Integer t = intersect(b, sigma);
  if (t != 0) b += t * sigma;
}
}  // namespace

void Frame::reflect(std::size_t i) {
  const DivisorClass sigma = simple_root(i);
  reflect_in_place(s_, sigma);
  reflect_in_place(f_, sigma);
  for (auto& x : e_) reflect_in_place(x, sigma);
}

void Frame::elementary_transform() {
  if (m() < 1) throw PreconditionError("elementary transformation needs m >= 1");
  if (parity_ == Parity::Even)
    s_ = s_ - e_[0];
  else
    s_ = s_ + f_ - e_[0];
  e_[0] = f_ - e_[0];
  parity_ = flip(parity_);
}

DivisorClass Frame::coordinates(const DivisorClass& D) const {
  require_same_context(D, s_);
  DivisorClass out(local_context());
  out[0] = intersect(D, f_);
  out[1] = intersect(D, s_) - out[0] * local_context().s_squared();
  for (std::size_t i = 1; i <= m(); ++i) out[i + 1] = intersect(D, e_[i - 1]);
  return out;
}

DivisorClass Frame::from_coordinates(const DivisorClass& local) const {
  if (!(local.context() == local_context()))
    throw ContextMismatch("local coordinates do not match the frame");
  DivisorClass D = local.n() * s_ + local.d() * f_;
  for (std::size_t i = 1; i <= m(); ++i) D -= local.r(i) * e_[i - 1];
  return D;
}

DivisorClass Frame::anticanonical_at_level(std::size_t k) const {
  DivisorClass A = anticanonical_class(ambient_);
  for (std::size_t i = k + 1; i <= m(); ++i) A += e_[i - 1];
  return A;
}

std::optional<std::size_t> Frame::first_negative_root(const DivisorClass& D) const {
  for (std::size_t i = simple_root_count(); i-- > 0;)
    if (intersect(D, simple_root(i)) < 0) return i;
  return std::nullopt;
}

}  // namespace ras
