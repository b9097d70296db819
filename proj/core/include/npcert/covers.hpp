#pragma once

#include "npcert/lattice.hpp"

#include <vector>

namespace npcert {

class CoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A degree-d cyclic cover phi: X -> S branched along a smooth member of
/// |d*L|. The machine-checkable surrogate for the smooth very-ample branch
/// curve is that d*L is ample and base point free on S; this assumption is
/// carried into every certificate. K_X = phi^*(K_S + (d-1)L) and
/// phi_*(O_X) = sum_{k<d} O_S(-kL).
class CyclicCover {
 public:
  static CyclicCover create(BaseSurface base, Int degree,
                            DivisorClass branch_class);

  const BaseSurface& base() const { return base_; }
  const Int& degree() const { return degree_; }
  const DivisorClass& branch_class() const { return branch_; }

  bool operator==(const CyclicCover&) const = default;

 private:
  CyclicCover(BaseSurface base, Int degree, DivisorClass branch)
      : base_(std::move(base)),
        degree_(std::move(degree)),
        branch_(std::move(branch)) {}
  BaseSurface base_;
  Int degree_;
  DivisorClass branch_;  // L; the branch divisor lives in |degree * L|
};

/// phi^*D on the cover. Pullbacks are the only line bundles representable
/// on X here; the pullback map on numerical classes is injective.
class PullbackClass {
 public:
  PullbackClass(CyclicCover cover, DivisorClass base_class);

  const CyclicCover& cover() const { return cover_; }
  const DivisorClass& base_class() const { return base_class_; }

  PullbackClass operator+(const PullbackClass& rhs) const;
  PullbackClass operator-(const PullbackClass& rhs) const;
  PullbackClass operator-() const;

  bool operator==(const PullbackClass&) const = default;
  bool is_zero() const { return base_class_.is_zero(); }

  std::string str() const { return "phi*(" + base_class_.str() + ")"; }

 private:
  CyclicCover cover_;
  DivisorClass base_class_;
};

PullbackClass operator*(const Int& n, const PullbackClass& d);

/// phi^*D1 . phi^*D2 = d * (D1 . D2). Operands must share a cover.
Int pullback_intersect(const PullbackClass& d1, const PullbackClass& d2);

/// K_X = phi^*(K_S + (d-1)L).
PullbackClass canonical_of_cover(const CyclicCover& cover);

/// phi_*(phi^*D) = sum_{k=0}^{d-1} O_S(D - kL), in that order.
std::vector<DivisorClass> pushforward_summands(const PullbackClass& d);

}  // namespace npcert
