#pragma once

#include "npcert/cohomology.hpp"
#include "npcert/positivity.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <variant>
#include <vector>

namespace npcert {

class EngineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RuleId {
  n0_1,
  n0_2,
  n0_3,
  n0_4,
  n1_0,
  n1_1,
  n1_2,
  n1_3,
  n1_5,
  main5,
  main51,
  main6,
};

std::string rule_name(RuleId id);
std::optional<RuleId> rule_from_name(const std::string& name);

/// One checked hypothesis of a rule: the exact values on both sides and how
/// the verdict was obtained.
struct Hypothesis {
  std::string name;
  std::string detail;  // exact values, as decimal/rational strings
  bool holds = false;
  std::string provenance;  // "direct computation", "integer comparison", ...
};

struct RuleAttempt {
  RuleId rule;
  bool succeeded = false;
  std::optional<Int> n_used;   // the derived n, when the rule has one
  std::optional<Int> r_bound;  // the rule's r requirement, when satisfied
  std::vector<Hypothesis> hypotheses;
  // first failing hypothesis name, for inapplicability reports
  std::string blocking() const;
};

struct NpCertificate {
  RuleId rule;
  Int p;
  Int r;        // the certified twist: N_p holds for K + rB
  Int r_bound;  // ... and for every r' >= r_bound by the same rule
  std::optional<Int> n_used;
  std::vector<Hypothesis> hypotheses;
  std::vector<std::string> assumptions;  // model assumptions, e.g. smooth branch
  std::vector<RuleAttempt> attempts;     // every route tried, winner included
};

struct Inapplicable {
  Int p;
  Int r;
  std::string blocking;  // name of the failing hypothesis of the best route
  std::vector<RuleAttempt> attempts;
};

using CertifyResult = std::variant<NpCertificate, Inapplicable>;

inline bool certified(const CertifyResult& res) {
  return std::holds_alternative<NpCertificate>(res);
}

struct EngineOptions {
  Int n_max{64};
  Int r_cap{3 + 4 * 64};
};

/// A cover together with the ample base-point-free bundle B and the cached
/// invariants every theorem consumes. All standing hypotheses are checked at
/// construction; soft failures (e.g. B not ample) are recorded and surface
/// as "inapplicable" from the certify operations, while B^2 <= 1 for an
/// ample bpf B is rejected outright.
class SurfaceContext {
 public:
  static SurfaceContext create(const CyclicCover& cover,
                               const DivisorClass& b_base);

  const CyclicCover& cover() const { return cover_; }
  const PullbackClass& B() const { return b_; }
  const PullbackClass& K() const { return k_; }
  const Int& B2() const { return b2_; }
  const Int& BK() const { return bk_; }
  const Int& K2() const { return k2_; }
  const Int& p_g() const { return invariants_.p_g; }
  const Int& q() const { return invariants_.q; }
  bool regular() const { return invariants_.regular; }
  bool minimal_certified() const { return invariants_.minimal_certified; }
  bool general_type_certified() const {
    return invariants_.general_type_certified;
  }
  const BpfCheck& k_plus_b() const { return k_plus_b_; }
  const std::optional<SlopeBound>& slope() const { return slope_; }
  /// Least n >= 2 with n B^2 >= B.K, i.e. B^2 >= (1/n)(B.K).
  const Int& slope_n() const { return slope_n_; }

  /// h^1(l B), cached.
  Int h1_multiple(const Int& l) const;

  const std::vector<Hypothesis>& standing_hypotheses() const {
    return standing_;
  }
  bool standing_ok() const;
  const std::vector<std::string>& assumptions() const { return assumptions_; }

 private:
  SurfaceContext(CyclicCover cover, PullbackClass b, PullbackClass k);
  CyclicCover cover_;
  PullbackClass b_;
  PullbackClass k_;
  Int b2_, bk_, k2_;
  SurfaceInvariants invariants_;
  BpfCheck k_plus_b_;
  std::optional<SlopeBound> slope_;
  Int slope_n_{0};
  std::vector<Hypothesis> standing_;
  std::vector<std::string> assumptions_;
  struct Cache {
    std::mutex mutex;
    std::map<Int, Int> h1;
  };
  std::shared_ptr<Cache> cache_;  // shared so contexts stay copyable
};

/// N_0 for K + rB, r >= 3 (r < 3 is a hard input error). Tries the
/// regular-surface corollaries first, then the general ones; the certificate
/// records every route in its appendix.
CertifyResult certify_N0(const SurfaceContext& ctx, const Int& r);

/// N_1 for K + rB, r >= 3.
CertifyResult certify_N1(const SurfaceContext& ctx, const Int& r);

/// N_p for K + rB, p >= 2. Derives, per rule, the least n in [2, n_max]
/// satisfying the nef and vanishing hypotheses, then picks the rule with the
/// weakest r requirement that r satisfies.
CertifyResult certify_Np(const SurfaceContext& ctx, const Int& r, const Int& p,
                         const EngineOptions& opts = {});

/// Dispatch on p.
CertifyResult certify(const SurfaceContext& ctx, const Int& r, const Int& p,
                      const EngineOptions& opts = {});

/// Smallest r >= 3 admitting a certificate for N_p, scanned up to r_cap.
std::optional<NpCertificate> min_r_for_Np(const SurfaceContext& ctx,
                                          const Int& p,
                                          const EngineOptions& opts = {});

}  // namespace npcert
