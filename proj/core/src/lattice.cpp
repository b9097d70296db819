#include "npcert/lattice.hpp"

namespace npcert {

BaseSurface BaseSurface::hirzebruch(Int e) {
  if (e < 0) throw LatticeError("Hirzebruch surface requires e >= 0");
  return BaseSurface(false, std::move(e));
}

BaseSurface BaseSurface::plane() { return BaseSurface(true, 0); }

const Int& BaseSurface::e() const {
  if (plane_) throw LatticeError("e() is undefined on the projective plane");
  return e_;
}

std::string BaseSurface::name() const {
  return plane_ ? "P^2" : "F_" + e_.str();
}

DivisorClass::DivisorClass(BaseSurface surface, Int c0, Int f)
    : surface_(std::move(surface)), a_(std::move(c0)), b_(std::move(f)) {
  if (surface_.is_plane())
    throw LatticeError("two-coordinate class on the projective plane");
}

DivisorClass::DivisorClass(BaseSurface surface, Int d)
    : surface_(std::move(surface)), a_(std::move(d)), b_(0) {
  if (!surface_.is_plane())
    throw LatticeError("single-coordinate class on a Hirzebruch surface");
}

DivisorClass DivisorClass::zero(const BaseSurface& surface) {
  if (surface.is_plane()) return DivisorClass(surface, Int(0));
  return DivisorClass(surface, Int(0), Int(0));
}

const Int& DivisorClass::d() const {
  if (!surface_.is_plane())
    throw LatticeError("d() is only defined on the projective plane");
  return a_;
}

DivisorClass DivisorClass::operator+(const DivisorClass& rhs) const {
  if (surface_ != rhs.surface_)
    throw LatticeError("mixed-surface divisor class addition");
  DivisorClass out = *this;
  out.a_ += rhs.a_;
  out.b_ += rhs.b_;
  return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& rhs) const {
  return *this + (-rhs);
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

std::string DivisorClass::str() const {
  if (surface_.is_plane()) return a_.str() + "H";
  return "(" + a_.str() + ")C0+(" + b_.str() + ")f";
}

DivisorClass operator*(const Int& n, const DivisorClass& d) {
  if (d.surface().is_plane()) return DivisorClass(d.surface(), n * d.c0());
  return DivisorClass(d.surface(), n * d.c0(), n * d.f());
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.surface() != d2.surface())
    throw LatticeError("intersection of classes on different surfaces");
  const BaseSurface& s = d1.surface();
  if (s.is_plane()) return d1.d() * d2.d();
  return -s.e() * d1.c0() * d2.c0() + d1.c0() * d2.f() + d2.c0() * d1.f();
}

DivisorClass canonical_class(const BaseSurface& surface) {
  if (surface.is_plane()) return DivisorClass(surface, Int(-3));
  return DivisorClass(surface, Int(-2), -(surface.e() + 2));
}

}  // namespace npcert
