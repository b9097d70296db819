#pragma once

#include "npcert/covers.hpp"

#include <utility>

namespace npcert {

class CohomologyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CohomDims {
  Int h0;
  Int h1;
  Int h2;
  Int chi() const { return h0 - h1 + h2; }
  bool operator==(const CohomDims&) const = default;
  CohomDims& operator+=(const CohomDims& rhs) {
    h0 += rhs.h0;
    h1 += rhs.h1;
    h2 += rhs.h2;
    return *this;
  }
};

/// (h^0, h^1) of O(n) on the projective line.
std::pair<Int, Int> h_line(const Int& n);

/// Exact (h^0, h^1, h^2) of O_S(D). On Hirzebruch surfaces via pushforward
/// to P^1, with h^2 always defined by Serre duality h^2(D) = h^0(K - D) and
/// the c0 <= -2 h^1 recovered from Riemann-Roch. Plane case by binomial
/// counts (h^1 = 0).
CohomDims cohomology_base(const BaseSurface& surface, const DivisorClass& d);

/// h^i(X, phi^*D) = sum_k h^i(S, D - kL), componentwise over the
/// pushforward summands.
CohomDims cohomology_cover(const PullbackClass& d);

/// chi(O) + (1/2) D.(D - K), exact. The half-value is always integral on
/// these lattices; a non-integral value is a fatal internal error.
Int euler_char(const BaseSurface& surface, const DivisorClass& d);
Int euler_char_cover(const PullbackClass& d);

struct SurfaceInvariants {
  Int p_g;  // h^0(K_X)
  Int q;    // h^1(O_X)
  Int k_squared;
  bool regular;                 // q == 0
  bool minimal_certified;       // K_X nef
  bool general_type_certified;  // K_X nef and K^2 > 0
};

SurfaceInvariants surface_invariants(const CyclicCover& cover);

}  // namespace npcert
