#include "npcert/positivity.hpp"

#include "npcert/cohomology.hpp"

namespace npcert {

bool is_nef(const DivisorClass& d) {
  if (d.surface().is_plane()) return d.d() >= 0;
  return d.c0() >= 0 && d.f() >= d.c0() * d.surface().e();
}

bool is_ample(const DivisorClass& d) {
  if (d.surface().is_plane()) return d.d() > 0;
  return d.c0() > 0 && d.f() > d.c0() * d.surface().e();
}

bool is_big(const DivisorClass& d) { return is_nef(d) && intersect(d, d) > 0; }

bool is_bpf(const DivisorClass& d) { return is_nef(d); }

bool is_nef_pullback(const PullbackClass& d) { return is_nef(d.base_class()); }
bool is_ample_pullback(const PullbackClass& d) {
  return is_ample(d.base_class());
}
bool is_big_pullback(const PullbackClass& d) { return is_big(d.base_class()); }
bool is_bpf_pullback(const PullbackClass& d) { return is_bpf(d.base_class()); }

std::optional<SlopeBound> SlopeBound::make(Int a, Int b) {
  if (a <= 0 || b <= 0 || a >= b) return std::nullopt;
  const Int g = boost::multiprecision::gcd(a, b);
  return SlopeBound{a / g, b / g};
}

std::optional<SlopeBound> best_slope_bound(const Int& b_squared,
                                           const Int& b_dot_k) {
  if (b_dot_k <= 0 || b_squared <= 0) return std::nullopt;
  Rat ratio(b_squared, b_dot_k);
  const Rat cap(63, 64);
  if (ratio > cap) ratio = cap;
  return SlopeBound::make(Int(boost::multiprecision::numerator(ratio)),
                          Int(boost::multiprecision::denominator(ratio)));
}

BpfCheck k_plus_b_bpf(const CyclicCover& cover, const PullbackClass& b) {
  if (!is_ample_pullback(b))
    throw CoverError("k_plus_b_bpf requires B ample");
  const Int b2 = pullback_intersect(b, b);
  if (b2 <= 1)
    throw CoverError("B^2 <= 1 is inconsistent with B ample and base point "
                     "free on a surface of general type");
  if (b2 >= 5) return BpfCheck{true, "Reider"};
  const PullbackClass kb = canonical_of_cover(cover) + b;
  if (is_bpf(kb.base_class())) return BpfCheck{true, "base-class check"};
  return BpfCheck{false, "hypothesis unavailable"};
}

bool H1Propagation::vanishes_at(const Int& l) const {
  if (l >= m0_) return true;
  return cohomology_cover(l * b_).h1 == 0;
}

std::optional<H1Propagation> h1_vanishing_from(const Int& m0,
                                               const SlopeBound& bound,
                                               const CyclicCover& cover,
                                               const PullbackClass& b) {
  const Int b2 = pullback_intersect(b, b);
  const Int bk = pullback_intersect(b, canonical_of_cover(cover));
  if (bound.b * b2 < bound.a * bk) return std::nullopt;  // slope bound fails
  if (bound.a * m0 <= bound.b) return std::nullopt;      // need m0 > b/a
  if (cohomology_cover(m0 * b).h1 != 0) return std::nullopt;
  return H1Propagation(m0, b);
}

std::optional<bool> lemma_1_2_check(const SlopeBound& bound,
                                    const CyclicCover& cover,
                                    const PullbackClass& b) {
  if (!is_ample_pullback(b)) return std::nullopt;
  const PullbackClass k = canonical_of_cover(cover);
  const Int b2 = pullback_intersect(b, b);
  const Int bk = pullback_intersect(b, k);
  const Int k2 = pullback_intersect(k, k);
  if (bound.b * b2 < bound.a * bk) return std::nullopt;
  return bound.b * bk >= bound.a * k2;
}

bool van_inequality(const Int& n, const Int& m, const Int& l) {
  return 2 * m > (n + 1) * (l + 2);
}

bool van1_inequality(const Int& n, const Int& m, const Int& l) {
  return m > n * (l + 1);
}

std::optional<bool> vanishing_van(const CyclicCover& cover,
                                  const PullbackClass& b, const Int& n,
                                  const Int& m, const Int& l) {
  const PullbackClass k = canonical_of_cover(cover);
  if (!is_nef_pullback((n + 1) * b - 2 * k)) return std::nullopt;
  return van_inequality(n, m, l);
}

std::optional<bool> vanishing_van1(const CyclicCover& cover,
                                   const PullbackClass& b, const Int& n,
                                   const Int& m, const Int& l) {
  const PullbackClass k = canonical_of_cover(cover);
  if (!is_nef_pullback(n * b - k)) return std::nullopt;
  return van1_inequality(n, m, l);
}

}  // namespace npcert
