#pragma once

#include "npcert/arith.hpp"

#include <stdexcept>
#include <string>

namespace npcert {

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A base surface: the Hirzebruch surface F_e (e >= 0) or the projective
/// plane. The Picard lattice is Z{C0, f} with C0^2 = -e, C0.f = 1, f^2 = 0,
/// respectively Z{H} with H^2 = 1.
class BaseSurface {
 public:
  static BaseSurface hirzebruch(Int e);
  static BaseSurface plane();

  bool is_plane() const { return plane_; }
  bool is_hirzebruch() const { return !plane_; }
  const Int& e() const;

  bool operator==(const BaseSurface&) const = default;

  std::string name() const;

 private:
  BaseSurface(bool plane, Int e) : plane_(plane), e_(std::move(e)) {}
  bool plane_;
  Int e_;  // only meaningful for Hirzebruch
};

/// Integer divisor class in the fixed basis of its surface. On a Hirzebruch
/// surface the coordinates are (c0, f) for c0*C0 + f*f; on the plane the
/// single coordinate d stands for d*H.
class DivisorClass {
 public:
  DivisorClass(BaseSurface surface, Int c0, Int f);  // Hirzebruch only
  DivisorClass(BaseSurface surface, Int d);          // plane only
  static DivisorClass zero(const BaseSurface& surface);

  const BaseSurface& surface() const { return surface_; }
  const Int& c0() const { return a_; }
  const Int& f() const { return b_; }
  const Int& d() const;  // plane only

  DivisorClass operator+(const DivisorClass& rhs) const;
  DivisorClass operator-(const DivisorClass& rhs) const;
  DivisorClass operator-() const;

  bool operator==(const DivisorClass&) const = default;
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  std::string str() const;

 private:
  BaseSurface surface_;
  Int a_;  // C0 coefficient, or H multiple on the plane
  Int b_;  // f coefficient; always 0 on the plane
};

DivisorClass operator*(const Int& n, const DivisorClass& d);

/// Exact intersection form value. Operands must live on the same surface.
Int intersect(const DivisorClass& d1, const DivisorClass& d2);

/// K_{F_e} = -2C0 - (e+2)f;  K_{P^2} = -3H.
DivisorClass canonical_class(const BaseSurface& surface);

}  // namespace npcert
