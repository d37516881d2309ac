#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ras/integer.hpp"

namespace ras {

using IntMatrix = std::vector<std::vector<Integer>>;

// Finitely generated abelian group Z^r + Z/n_1 + ... + Z/n_t. Elements are
// coordinate vectors with the torsion coordinates kept in [0, n_j).
class AbGroup {
 public:
  using Element = std::vector<Integer>;

  AbGroup() = default;
  AbGroup(std::size_t free_rank, std::vector<Integer> torsion);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  std::size_t dimension() const { return free_rank_ + torsion_.size(); }

  Element zero() const { return Element(dimension()); }
  Element generator(std::size_t i) const;
  Element reduce(Element x) const;
  void check(const Element& x) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const Integer& k, const Element& a) const;
  Element neg(const Element& a) const { return scale(-1, a); }
  bool is_zero(const Element& a) const;

  // Order of a, or nullopt when it has infinite order.
  std::optional<Integer> order(const Element& a) const;

  struct Quotient;
  // Quotient by the subgroup generated by the given elements.
  Quotient quotient(const std::vector<Element>& relations) const;
  Quotient quotient(const Element& w) const;

  std::string to_string() const;
  friend bool operator==(const AbGroup&, const AbGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

struct AbGroup::Quotient {
  AbGroup group;
  // Row i gives the i-th target coordinate as a linear form on source coordinates.
  IntMatrix projection;
  Element project(const Element& x) const;
};

// Smith normal form diagonal of an integer matrix, for tests and diagnostics.
std::vector<Integer> smith_diagonal(IntMatrix A);

}  // namespace ras
