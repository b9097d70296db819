#include "npcert/lattice.hpp"

#include <doctest.h>

using namespace npcert;

TEST_CASE("intersection form on the standard bases") {
  const BaseSurface p2 = BaseSurface::plane();
  CHECK(intersect(DivisorClass(p2, 1), DivisorClass(p2, 1)) == 1);
  CHECK(intersect(DivisorClass(p2, 3), DivisorClass(p2, 5)) == 15);

  for (Int e = 0; e <= 3; ++e) {
    const BaseSurface fe = BaseSurface::hirzebruch(e);
    const DivisorClass c0(fe, 1, 0);
    const DivisorClass f(fe, 0, 1);
    CHECK(intersect(c0, c0) == -e);
    CHECK(intersect(c0, f) == 1);
    CHECK(intersect(f, f) == 0);
  }
}

TEST_CASE("canonical classes") {
  CHECK(canonical_class(BaseSurface::plane()) ==
        DivisorClass(BaseSurface::plane(), -3));
  for (Int e = 0; e <= 4; ++e) {
    const BaseSurface fe = BaseSurface::hirzebruch(e);
    CHECK(canonical_class(fe) == DivisorClass(fe, -2, -(e + 2)));
    // K^2 = 8 on every Hirzebruch surface
    CHECK(intersect(canonical_class(fe), canonical_class(fe)) == 8);
  }
  CHECK(intersect(canonical_class(BaseSurface::plane()),
                  canonical_class(BaseSurface::plane())) == 9);
}

TEST_CASE("bilinearity and symmetry, exhaustive on small coordinates") {
  for (Int e = 0; e <= 2; ++e) {
    const BaseSurface fe = BaseSurface::hirzebruch(e);
    for (Int a1 = -20; a1 <= 20; a1 += 5)
      for (Int b1 = -20; b1 <= 20; b1 += 5)
        for (Int a2 = -20; a2 <= 20; a2 += 5)
          for (Int b2 = -20; b2 <= 20; b2 += 5) {
            const DivisorClass d1(fe, a1, b1);
            const DivisorClass d2(fe, a2, b2);
            CHECK(intersect(d1, d2) == intersect(d2, d1));
            CHECK(intersect(d1 + d2, d1) ==
                  intersect(d1, d1) + intersect(d2, d1));
            CHECK(intersect(Int(3) * d1, d2) == 3 * intersect(d1, d2));
            CHECK(intersect(-d1, d2) == -intersect(d1, d2));
          }
  }
}

TEST_CASE("arithmetic stays on one surface") {
  const BaseSurface f1 = BaseSurface::hirzebruch(1);
  const BaseSurface f2 = BaseSurface::hirzebruch(2);
  const BaseSurface p2 = BaseSurface::plane();
  CHECK_THROWS_AS(intersect(DivisorClass(f1, 1, 1), DivisorClass(f2, 1, 1)),
                  LatticeError);
  CHECK_THROWS_AS(intersect(DivisorClass(f1, 1, 1), DivisorClass(p2, 1)),
                  LatticeError);
  CHECK_THROWS_AS(DivisorClass(f1, 1, 1) + DivisorClass(f2, 1, 1),
                  LatticeError);
  // wrong arity for the surface
  CHECK_THROWS_AS(DivisorClass(p2, 1, 1), LatticeError);
  CHECK_THROWS_AS(DivisorClass(f1, 1), LatticeError);
  CHECK_THROWS_AS(BaseSurface::hirzebruch(-1), LatticeError);
}

TEST_CASE("zero class and negation") {
  const BaseSurface f1 = BaseSurface::hirzebruch(1);
  const DivisorClass z = DivisorClass::zero(f1);
  CHECK(z.is_zero());
  const DivisorClass d(f1, 2, -3);
  CHECK((d - d).is_zero());
  CHECK(d + (-d) == z);
}
