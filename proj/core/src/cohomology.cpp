#include "npcert/cohomology.hpp"

#include "npcert/positivity.hpp"

namespace npcert {

namespace {

// h^0 of aC0+bf on F_e via the pushforward Sym decomposition; 0 for a < 0.
Int h0_hirzebruch(const BaseSurface& s, const DivisorClass& d) {
  if (d.c0() < 0) return 0;
  Int total = 0;
  for (Int k = 0; k <= d.c0(); ++k) total += h_line(d.f() - k * s.e()).first;
  return total;
}

Int h0_plane(const Int& deg) {
  if (deg < 0) return 0;
  return (deg + 2) * (deg + 1) / 2;
}

Int half_exact(const Int& v, const char* what) {
  if (v % 2 != 0)
    throw CohomologyError(std::string("non-integral half-value in ") + what);
  return v / 2;
}

}  // namespace

std::pair<Int, Int> h_line(const Int& n) {
  Int h0 = n + 1;
  if (h0 < 0) h0 = 0;
  Int h1 = -n - 1;
  if (h1 < 0) h1 = 0;
  return {h0, h1};
}

CohomDims cohomology_base(const BaseSurface& surface, const DivisorClass& d) {
  if (d.surface() != surface)
    throw LatticeError("cohomology of a class on a different surface");
  const DivisorClass k = canonical_class(surface);

  if (surface.is_plane()) {
    return CohomDims{h0_plane(d.d()), 0, h0_plane(-3 - d.d())};
  }

  const Int& a = d.c0();
  const Int h2 = h0_hirzebruch(surface, k - d);
  if (a >= 0) {
    Int h0 = 0, h1 = 0;
    for (Int kk = 0; kk <= a; ++kk) {
      const auto [l0, l1] = h_line(d.f() - kk * surface.e());
      h0 += l0;
      h1 += l1;
    }
    return CohomDims{h0, h1, h2};
  }
  if (a == -1) return CohomDims{0, 0, 0};

  // a <= -2: h^0 = 0, h^2 by duality, h^1 from Riemann-Roch.
  const Int h1 = h2 - euler_char(surface, d);
  if (h1 < 0)
    throw CohomologyError("negative h^1 from Riemann-Roch on " + d.str());
  return CohomDims{0, h1, h2};
}

CohomDims cohomology_cover(const PullbackClass& d) {
  CohomDims total{0, 0, 0};
  for (const DivisorClass& summand : pushforward_summands(d))
    total += cohomology_base(d.cover().base(), summand);
  return total;
}

Int euler_char(const BaseSurface& surface, const DivisorClass& d) {
  const DivisorClass k = canonical_class(surface);
  const Int chi0 = cohomology_base(surface, DivisorClass::zero(surface)).chi();
  return chi0 + half_exact(intersect(d, d - k), "euler_char");
}

Int euler_char_cover(const PullbackClass& d) {
  const PullbackClass zero(d.cover(),
                           DivisorClass::zero(d.cover().base()));
  const Int chi0 = cohomology_cover(zero).chi();
  const PullbackClass k = canonical_of_cover(d.cover());
  return chi0 + half_exact(pullback_intersect(d, d - k), "euler_char_cover");
}

SurfaceInvariants surface_invariants(const CyclicCover& cover) {
  const PullbackClass k = canonical_of_cover(cover);
  const PullbackClass zero(cover, DivisorClass::zero(cover.base()));
  SurfaceInvariants inv;
  inv.p_g = cohomology_cover(k).h0;
  inv.q = cohomology_cover(zero).h1;
  inv.k_squared = pullback_intersect(k, k);
  inv.regular = (inv.q == 0);
  inv.minimal_certified = is_nef_pullback(k);
  inv.general_type_certified = inv.minimal_certified && inv.k_squared > 0;
  return inv;
}

}  // namespace npcert
