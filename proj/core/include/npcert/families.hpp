#pragma once

#include "npcert/np_engine.hpp"

namespace npcert {

/// Bad family parameters (wrong range, parity, non-membership).
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A family member passed its defining inequality system but failed direct
/// geometric verification (or vice versa off a polytope boundary). This is
/// an internal inconsistency, never a silent drop.
class FamilyInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class FamilyId { ex5_1, ex5_2, ex5_3, ex5_4, ex5_5, ex5_7 };

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

struct ClaimCheck {
  std::string claim;
  bool verdict = false;
  std::string witness;  // the computed values behind the verdict
};

struct FamilySolution {
  FamilyId family;
  std::vector<std::pair<std::string, Int>> parameters;
  SurfaceContext context;
  std::vector<ClaimCheck> verification;
  bool all_verified() const;
};

/// The strict inequality systems defining membership, exactly as stated:
/// m < (n+1)b-n+1, 2m < (n+1)b+1-n, 2m > nb+2-n, and
/// m < (n+1)b-n+1, m < nb-n+1, m > (n-1)b-n+2.
bool ex5_3_inequalities(const Int& n, const Int& b, const Int& m);
bool ex5_4_inequalities(const Int& n, const Int& b, const Int& m);

/// The degree-d cover of F_1 branched in |d(3C0+(m+3)f)| carrying
/// B = phi^*(C0 + bf); d = 2 gives K = phi^*(C0 + mf).
SurfaceContext double_cover_model(const Int& b, const Int& m,
                                  const Int& degree = 2);

/// Build and directly verify one member; throws FamilyError when (n,b,m)
/// fails the inequality system and FamilyInconsistency when an
/// inequality-passing member fails a direct geometric check.
FamilySolution ex5_3_member(const Int& n, const Int& b, const Int& m);
FamilySolution ex5_4_member(const Int& n, const Int& b, const Int& m);

/// A lattice point off the strict polytope whose direct geometric checks
/// nevertheless all pass; must sit on a defining boundary line.
struct BoundaryDiscrepancy {
  Int b;
  Int m;
  std::string detail;
};

struct EnumerationResult {
  std::vector<FamilySolution> solutions;  // lexicographic in (b, m)
  std::vector<BoundaryDiscrepancy> boundary_discrepancies;
};

/// All members with 2 <= b <= b_max, m >= 1, each directly verified; the
/// scan also cross-checks every non-member in range and reports
/// direct-check passes (allowed only on polytope boundaries).
EnumerationResult enumerate_ex5_3(const Int& n, const Int& b_max);
EnumerationResult enumerate_ex5_4(const Int& n, const Int& b_max);

/// Arbitrary-degree variant of the construction: the claims become the
/// standing ones plus existence of some n <= n_max making (n+1)B-2K nef
/// with h1((n+1)B) = 0.
FamilySolution build_ex5_5(const Int& degree, const Int& b, const Int& m,
                           const Int& n_max = 64);

/// The obstruction family: n+m even, n+m >= 6; b_param = n+m-2, r = b_param/2,
/// s = b_param, double cover of F_1 branched in |2((r+2)C0+(s+3)f)| with
/// B = phi^*(C0+2f).
FamilySolution build_ex5_7(const Int& n, const Int& m);

/// The two fixed plane-cover models (double cover branched in degree 10,
/// triple cover branched in degree 9), invariants and engine bounds verified.
std::vector<FamilySolution> build_classics();

}  // namespace npcert
