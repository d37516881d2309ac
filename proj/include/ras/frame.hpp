#pragma once

#include <optional>
#include <vector>

#include "ras/picard.hpp"

namespace ras {

// A numerical blowdown structure written in the coordinates of a fixed
// ambient lattice. Walks move the frame and leave every class where it is, so
// intersection numbers with stored components never need recomputing.
class Frame {
 public:
  Frame() : Frame(LatticeContext{}) {}
  explicit Frame(LatticeContext ambient);

  const LatticeContext& ambient() const { return ambient_; }
  std::size_t m() const { return ambient_.m; }
  Parity parity() const { return parity_; }
  LatticeContext local_context() const { return LatticeContext{ambient_.m, parity_}; }

  const DivisorClass& s() const { return s_; }
  const DivisorClass& f() const { return f_; }
  const DivisorClass& e(std::size_t i) const { return e_.at(i - 1); }

  std::size_t simple_root_count() const;
  DivisorClass simple_root(std::size_t i) const;

  // Replace the frame by its image under reflection in its own i-th simple root.
  void reflect(std::size_t i);
  void elementary_transform();

  // Coordinates of an ambient class in this frame, and back.
  DivisorClass coordinates(const DivisorClass& D) const;
  DivisorClass from_coordinates(const DivisorClass& local) const;

  // Pullback of -K of the level-k surface, i.e. -K plus e_{k+1} .. e_m.
  DivisorClass anticanonical_at_level(std::size_t k) const;

  // Index of the simple root chosen by the walks among those meeting D
  // negatively. Roots with larger index are smaller in the lexicographic order
  // of their coefficient vectors, so the scan runs from the top index down.
  std::optional<std::size_t> first_negative_root(const DivisorClass& D) const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.parity_ == b.parity_ && a.s_ == b.s_ && a.f_ == b.f_ && a.e_ == b.e_;
  }

 private:
  LatticeContext ambient_;
  Parity parity_;
  DivisorClass s_, f_;
  std::vector<DivisorClass> e_;
};

}  // namespace ras
