#pragma once

#include "npcert/covers.hpp"

#include <optional>
#include <string>

namespace npcert {

// --- cone predicates on base surfaces -------------------------------------
//
// Nef on F_e is the exact Mori-cone test: c0 >= 0 and f >= e*c0 (nonnegative
// against both C0 and the fiber). On the plane: d >= 0. Ample is the strict
// version. On these toric bases nef classes are globally generated, so bpf
// coincides with nef.

bool is_nef(const DivisorClass& d);
bool is_ample(const DivisorClass& d);
bool is_big(const DivisorClass& d);  // nef and d^2 > 0
bool is_bpf(const DivisorClass& d);

// Nefness, ampleness and global generation all descend through phi^*.
bool is_nef_pullback(const PullbackClass& d);
bool is_ample_pullback(const PullbackClass& d);
bool is_big_pullback(const PullbackClass& d);
bool is_bpf_pullback(const PullbackClass& d);

// --- slope bounds ----------------------------------------------------------

/// The pair a < b of positive integers in "B^2 >= (a/b)(B.K)", stored in
/// lowest terms.
struct SlopeBound {
  Int a;
  Int b;

  static std::optional<SlopeBound> make(Int a, Int b);
  Rat value() const { return Rat(a, b); }
  std::string str() const { return a.str() + "/" + b.str(); }
};

/// Best usable a/b for given B^2, B.K: the reduced form of B^2/(B.K) when
/// B^2 < B.K, otherwise capped just below 1 (every hypothesis downstream is
/// monotone in a/b, so maximizing it weakly dominates).
std::optional<SlopeBound> best_slope_bound(const Int& b_squared,
                                           const Int& b_dot_k);

// --- base point freeness of K+B ---------------------------------------------

struct BpfCheck {
  bool holds = false;
  std::string provenance;  // "Reider" or "base-class check"
};

/// K_X + B base point free: by Reider when B^2 >= 5, otherwise by checking
/// the base class of K_X + B. Requires B ample; B^2 <= 1 is rejected as
/// inconsistent with B ample and base point free on a general-type surface.
BpfCheck k_plus_b_bpf(const CyclicCover& cover, const PullbackClass& b);

// --- vanishing rules ---------------------------------------------------------

/// H^1(lB) = 0 for all l >= m0, propagated from a single computed vanishing
/// H^1(m0 B) = 0 with m0 > b/a and B^2 >= (a/b)(B.K). Below m0, delegates to
/// direct computation.
class H1Propagation {
 public:
  bool vanishes_at(const Int& l) const;
  const Int& start() const { return m0_; }

 private:
  friend std::optional<H1Propagation> h1_vanishing_from(const Int&,
                                                        const SlopeBound&,
                                                        const CyclicCover&,
                                                        const PullbackClass&);
  H1Propagation(Int m0, PullbackClass b) : m0_(std::move(m0)), b_(std::move(b)) {}
  Int m0_;
  PullbackClass b_;
};

/// Returns nullopt ("rule inapplicable") when a precondition fails: the
/// slope bound does not hold for B, m0 <= b/a, or H^1(m0 B) != 0.
std::optional<H1Propagation> h1_vanishing_from(const Int& m0,
                                               const SlopeBound& bound,
                                               const CyclicCover& cover,
                                               const PullbackClass& b);

/// B ample with B^2 >= (a/b)(B.K) forces B.K >= (a/b)K^2. Returns the
/// verdict of that integer comparison, or nullopt if the precondition fails.
/// Must come back true on every valid model; used as an engine self-test.
std::optional<bool> lemma_1_2_check(const SlopeBound& bound,
                                    const CyclicCover& cover,
                                    const PullbackClass& b);

/// The bare inequalities of the two vanishing lemmas:
/// with (n+1)B-2K nef, H^1(mB-lK) = H^2(mB-lK) = 0 if m > (n+1)(l+2)/2;
/// with nB-K nef, the same vanishing if m > n(l+1).
bool van_inequality(const Int& n, const Int& m, const Int& l);
bool van1_inequality(const Int& n, const Int& m, const Int& l);

/// Checked versions: verify the nef precondition on the given model first;
/// nullopt when it fails (no claim either way).
std::optional<bool> vanishing_van(const CyclicCover& cover,
                                  const PullbackClass& b, const Int& n,
                                  const Int& m, const Int& l);
std::optional<bool> vanishing_van1(const CyclicCover& cover,
                                   const PullbackClass& b, const Int& n,
                                   const Int& m, const Int& l);

}  // namespace npcert
