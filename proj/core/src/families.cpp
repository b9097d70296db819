#include "npcert/families.hpp"

#include <algorithm>

namespace npcert {

namespace {

ClaimCheck claim(std::string name, bool verdict, std::string witness) {
  return ClaimCheck{std::move(name), verdict, std::move(witness)};
}

void require_verified(const FamilySolution& sol) {
  for (const ClaimCheck& c : sol.verification)
    if (!c.verdict)
      throw FamilyInconsistency(family_name(sol.family) +
                                " member failed direct verification of \"" +
                                c.claim + "\" (" + c.witness + ")");
}

// Claims shared by every family: the construction yields a minimal regular
// surface of general type carrying an ample base-point-free B with K+B bpf.
std::vector<ClaimCheck> standing_claims(const SurfaceContext& ctx,
                                        bool want_regular_pg) {
  std::vector<ClaimCheck> out;
  if (want_regular_pg) {
    out.push_back(claim("X regular (q = 0)", ctx.q() == 0,
                        "q = " + str(ctx.q())));
    out.push_back(claim("p_g >= 3", ctx.p_g() >= 3,
                        "p_g = " + str(ctx.p_g())));
  }
  out.push_back(claim("X minimal of general type",
                      ctx.general_type_certified(),
                      "K nef, K^2 = " + str(ctx.K2())));
  out.push_back(claim("B ample and base point free",
                      is_ample_pullback(ctx.B()) && is_bpf_pullback(ctx.B()),
                      "B = " + ctx.B().str()));
  out.push_back(claim("K+B base point free", ctx.k_plus_b().holds,
                      ctx.k_plus_b().provenance));
  return out;
}

ClaimCheck h1_claim(const SurfaceContext& ctx, const Int& l) {
  const Int v = ctx.h1_multiple(l);
  return claim("h1(" + str(l) + "B) = 0", v == 0, "h1 = " + str(v));
}

ClaimCheck nef_claim(const SurfaceContext& ctx, const PullbackClass& d,
                     const std::string& name, bool want_nef) {
  const bool nef = is_nef_pullback(d);
  return claim(name, nef == want_nef,
               d.str() + (nef ? " is nef" : " is not nef"));
}

std::vector<ClaimCheck> ex5_3_claims(const Int& n, const SurfaceContext& ctx) {
  std::vector<ClaimCheck> out = standing_claims(ctx, true);
  out.push_back(claim("B^2 >= 5", ctx.B2() >= 5, "B^2 = " + str(ctx.B2())));
  out.push_back(h1_claim(ctx, n + 1));
  out.push_back(nef_claim(ctx, (n + 1) * ctx.B() - 2 * ctx.K(),
                          "(n+1)B-2K nef", true));
  out.push_back(nef_claim(ctx, n * ctx.B() - 2 * ctx.K(),
                          "nB-2K not nef", false));
  return out;
}

std::vector<ClaimCheck> ex5_4_claims(const Int& n, const SurfaceContext& ctx) {
  std::vector<ClaimCheck> out = standing_claims(ctx, false);
  out.push_back(h1_claim(ctx, n + 1));
  out.push_back(nef_claim(ctx, n * ctx.B() - ctx.K(), "nB-K nef", true));
  out.push_back(nef_claim(ctx, (n - 1) * ctx.B() - ctx.K(),
                          "(n-1)B-K not nef", false));
  return out;
}

bool all_hold(const std::vector<ClaimCheck>& claims) {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimCheck& c) { return c.verdict; });
}

bool on_ex5_3_boundary(const Int& n, const Int& b, const Int& m) {
  return m == (n + 1) * b - n + 1 || 2 * m == (n + 1) * b + 1 - n ||
         2 * m == n * b + 2 - n;
}

bool on_ex5_4_boundary(const Int& n, const Int& b, const Int& m) {
  return m == (n + 1) * b - n + 1 || m == n * b - n + 1 ||
         m == (n - 1) * b - n + 2;
}

void check_enumeration_preconditions(const Int& n, const Int& b_max) {
  if (n < 2) throw FamilyError("family enumeration requires n >= 2");
  if (b_max < 2) throw FamilyError("family enumeration requires b_max >= 2");
}

FamilySolution make_solution(FamilyId id,
                             std::vector<std::pair<std::string, Int>> params,
                             SurfaceContext ctx,
                             std::vector<ClaimCheck> claims) {
  return FamilySolution{id, std::move(params), std::move(ctx),
                        std::move(claims)};
}

}  // namespace

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::ex5_1: return "ex5_1";
    case FamilyId::ex5_2: return "ex5_2";
    case FamilyId::ex5_3: return "ex5_3";
    case FamilyId::ex5_4: return "ex5_4";
    case FamilyId::ex5_5: return "ex5_5";
    case FamilyId::ex5_7: return "ex5_7";
  }
  return "?";
}

std::optional<FamilyId> family_from_name(const std::string& name) {
  for (FamilyId id : {FamilyId::ex5_1, FamilyId::ex5_2, FamilyId::ex5_3,
                      FamilyId::ex5_4, FamilyId::ex5_5, FamilyId::ex5_7})
    if (family_name(id) == name) return id;
  return std::nullopt;
}

bool FamilySolution::all_verified() const { return all_hold(verification); }

bool ex5_3_inequalities(const Int& n, const Int& b, const Int& m) {
  return m < (n + 1) * b - n + 1 && 2 * m < (n + 1) * b + 1 - n &&
         2 * m > n * b + 2 - n;
}

bool ex5_4_inequalities(const Int& n, const Int& b, const Int& m) {
  return m < (n + 1) * b - n + 1 && m < n * b - n + 1 &&
         m > (n - 1) * b - n + 2;
}

SurfaceContext double_cover_model(const Int& b, const Int& m,
                                  const Int& degree) {
  if (b < 2) throw FamilyError("the construction needs b > 1");
  if (m < 1) throw FamilyError("the construction needs m >= 1");
  const BaseSurface s = BaseSurface::hirzebruch(1);
  const DivisorClass branch(s, 3, m + 3);
  const CyclicCover cover = CyclicCover::create(s, degree, branch);
  return SurfaceContext::create(cover, DivisorClass(s, 1, b));
}

FamilySolution ex5_3_member(const Int& n, const Int& b, const Int& m) {
  if (n < 2) throw FamilyError("ex5_3 requires n >= 2");
  if (!ex5_3_inequalities(n, b, m))
    throw FamilyError("(b, m) = (" + str(b) + ", " + str(m) +
                      ") is outside the ex5_3 inequality system for n = " +
                      str(n));
  SurfaceContext ctx = double_cover_model(b, m);
  std::vector<ClaimCheck> claims = ex5_3_claims(n, ctx);
  FamilySolution sol = make_solution(
      FamilyId::ex5_3, {{"n", n}, {"b", b}, {"m", m}}, std::move(ctx),
      std::move(claims));
  require_verified(sol);
  return sol;
}

FamilySolution ex5_4_member(const Int& n, const Int& b, const Int& m) {
  if (n < 2) throw FamilyError("ex5_4 requires n >= 2");
  if (!ex5_4_inequalities(n, b, m))
    throw FamilyError("(b, m) = (" + str(b) + ", " + str(m) +
                      ") is outside the ex5_4 inequality system for n = " +
                      str(n));
  SurfaceContext ctx = double_cover_model(b, m);
  std::vector<ClaimCheck> claims = ex5_4_claims(n, ctx);
  FamilySolution sol = make_solution(
      FamilyId::ex5_4, {{"n", n}, {"b", b}, {"m", m}}, std::move(ctx),
      std::move(claims));
  require_verified(sol);
  return sol;
}

EnumerationResult enumerate_ex5_3(const Int& n, const Int& b_max) {
  check_enumeration_preconditions(n, b_max);
  EnumerationResult out;
  for (Int b = 2; b <= b_max; ++b) {
    // Direct verification needs (n+1)b - 2m >= n-1, so the scan over m is
    // finite even before the strict system cuts it off.
    for (Int m = 1; 2 * m <= (n + 1) * b - n + 1; ++m) {
      if (ex5_3_inequalities(n, b, m)) {
        out.solutions.push_back(ex5_3_member(n, b, m));
        continue;
      }
      SurfaceContext ctx = double_cover_model(b, m);
      if (!all_hold(ex5_3_claims(n, ctx))) continue;
      if (!on_ex5_3_boundary(n, b, m))
        throw FamilyInconsistency(
            "ex5_3: interior point (" + str(b) + ", " + str(m) +
            ") outside the strict system passes direct verification");
      out.boundary_discrepancies.push_back(
          {b, m, "direct checks pass on a polytope boundary line"});
    }
  }
  return out;
}

EnumerationResult enumerate_ex5_4(const Int& n, const Int& b_max) {
  check_enumeration_preconditions(n, b_max);
  EnumerationResult out;
  for (Int b = 2; b <= b_max; ++b) {
    for (Int m = 1; m <= n * b - n + 1; ++m) {
      if (ex5_4_inequalities(n, b, m)) {
        out.solutions.push_back(ex5_4_member(n, b, m));
        continue;
      }
      SurfaceContext ctx = double_cover_model(b, m);
      if (!all_hold(ex5_4_claims(n, ctx))) continue;
      if (!on_ex5_4_boundary(n, b, m))
        throw FamilyInconsistency(
            "ex5_4: interior point (" + str(b) + ", " + str(m) +
            ") outside the strict system passes direct verification");
      out.boundary_discrepancies.push_back(
          {b, m, "direct checks pass on a polytope boundary line"});
    }
  }
  return out;
}

FamilySolution build_ex5_5(const Int& degree, const Int& b, const Int& m,
                           const Int& n_max) {
  if (degree < 2) throw FamilyError("ex5_5 requires degree >= 2");
  SurfaceContext ctx = double_cover_model(b, m, degree);
  std::vector<ClaimCheck> claims = standing_claims(ctx, true);
  claims.push_back(
      claim("B^2 >= 5", ctx.B2() >= 5, "B^2 = " + str(ctx.B2())));
  std::optional<Int> found;
  for (Int n = 2; n <= n_max && !found; ++n)
    if (is_nef_pullback((n + 1) * ctx.B() - 2 * ctx.K()) &&
        ctx.h1_multiple(n + 1) == 0)
      found = n;
  claims.push_back(claim(
      "(n+1)B-2K nef and h1((n+1)B) = 0 for some n",
      found.has_value(),
      found ? "least n = " + str(*found) : "no n <= " + str(n_max)));
  FamilySolution sol = make_solution(
      FamilyId::ex5_5, {{"degree", degree}, {"b", b}, {"m", m}},
      std::move(ctx), std::move(claims));
  require_verified(sol);
  return sol;
}

FamilySolution build_ex5_7(const Int& n, const Int& m) {
  if (n < 1 || m < 1) throw FamilyError("ex5_7 requires n, m >= 1");
  if ((n + m) % 2 != 0) throw FamilyError("ex5_7 requires n+m even");
  if (n + m < 6) throw FamilyError("ex5_7 requires n+m >= 6");
  const Int b = n + m - 2;  // the construction's b_param; >= 4 and even
  const Int r = b / 2;
  const Int s = b;
  const BaseSurface f1 = BaseSurface::hirzebruch(1);
  const CyclicCover cover =
      CyclicCover::create(f1, 2, DivisorClass(f1, r + 2, s + 3));
  SurfaceContext ctx = SurfaceContext::create(cover, DivisorClass(f1, 1, 2));

  std::vector<ClaimCheck> claims = standing_claims(ctx, true);
  claims.push_back(
      claim("K^2 >= 2", ctx.K2() >= 2, "K^2 = " + str(ctx.K2())));
  claims.push_back(claim("B^2 = 6", ctx.B2() == 6, "B^2 = " + str(ctx.B2())));
  claims.push_back(claim("B.K = 2(r+s)", ctx.BK() == 2 * (r + s),
                         "B.K = " + str(ctx.BK()) +
                             ", 2(r+s) = " + str(2 * (r + s))));
  claims.push_back(claim(
      "B.K > B^2 >= (2/b)(B.K)",
      ctx.BK() > ctx.B2() && b * ctx.B2() >= 2 * ctx.BK(),
      "B.K = " + str(ctx.BK()) + ", B^2 = " + str(ctx.B2()) +
          ", (2/b)(B.K) = " + str(Rat(2 * ctx.BK(), b))));
  const Rat identity = Rat((n + m - 2) * 4, b * b) + Rat((n + m - 4) * 2, b);
  claims.push_back(claim("(n+m-2)a^2/b^2 + (n+m-4)a/b = 2 at a = 2",
                         identity == 2, "lhs = " + str(identity)));
  claims.push_back(h1_claim(ctx, b));
  const PullbackClass obstruction = 2 * ctx.K() - (b - 1) * ctx.B();
  const Int h0 = cohomology_cover(obstruction).h0;
  // The closing statement writes K_S where only K_X makes sense; the check
  // targets K_X. Serre duality: h^2((n+m-3)B - K) = h^0(2K - (b-1)B).
  const Int h2 = cohomology_cover((n + m - 3) * ctx.B() - ctx.K()).h2;
  claims.push_back(claim("h0(2K-(b-1)B) > 0", h0 > 0, "h0 = " + str(h0)));
  claims.push_back(claim("h2((n+m-3)B-K) = h0(2K-(b-1)B) (K = K_X)", h2 == h0,
                         "h2 = " + str(h2) + ", h0 = " + str(h0)));

  FamilySolution sol = make_solution(
      FamilyId::ex5_7,
      {{"n", n}, {"m", m}, {"b_param", b}, {"r", r}, {"s", s}},
      std::move(ctx), std::move(claims));
  require_verified(sol);
  return sol;
}

std::vector<FamilySolution> build_classics() {
  std::vector<FamilySolution> out;

  const BaseSurface p2 = BaseSurface::plane();
  {
    // Double cover of the plane branched along a degree-10 curve.
    const CyclicCover cover =
        CyclicCover::create(p2, 2, DivisorClass(p2, 5));
    SurfaceContext ctx = SurfaceContext::create(cover, DivisorClass(p2, 1));
    std::vector<ClaimCheck> claims = standing_claims(ctx, true);
    claims.push_back(
        claim("B^2 = 2", ctx.B2() == 2, "B^2 = " + str(ctx.B2())));
    claims.push_back(
        claim("B.K = 4", ctx.BK() == 4, "B.K = " + str(ctx.BK())));
    claims.push_back(
        claim("K^2 = 8", ctx.K2() == 8, "K^2 = " + str(ctx.K2())));
    claims.push_back(
        claim("p_g = 6", ctx.p_g() == 6, "p_g = " + str(ctx.p_g())));
    claims.push_back(h1_claim(ctx, 1));
    const CertifyResult res = certify_N0(ctx, 3);
    claims.push_back(claim(
        "N_0 holds for K+3B", certified(res),
        certified(res) ? "rule " + rule_name(std::get<NpCertificate>(res).rule)
                       : std::get<Inapplicable>(res).blocking));
    FamilySolution sol = make_solution(
        FamilyId::ex5_1, {{"degree", 2}, {"branch_degree", 10}},
        std::move(ctx), std::move(claims));
    require_verified(sol);
    out.push_back(std::move(sol));
  }
  {
    // Triple cover of the plane branched along a degree-9 curve.
    const CyclicCover cover =
        CyclicCover::create(p2, 3, DivisorClass(p2, 3));
    SurfaceContext ctx = SurfaceContext::create(cover, DivisorClass(p2, 1));
    std::vector<ClaimCheck> claims = standing_claims(ctx, true);
    claims.push_back(
        claim("B^2 = 3", ctx.B2() == 3, "B^2 = " + str(ctx.B2())));
    claims.push_back(
        claim("B.K = 9", ctx.BK() == 9, "B.K = " + str(ctx.BK())));
    bool h1_all = true;
    for (Int l = 1; l <= 10; ++l) h1_all = h1_all && ctx.h1_multiple(l) == 0;
    claims.push_back(
        claim("h1(lB) = 0 for l = 1..10", h1_all, "sampled l = 1..10"));
    const CertifyResult res = certify_N1(ctx, 5);
    const bool via_n1_3 =
        certified(res) && std::get<NpCertificate>(res).rule == RuleId::n1_3;
    claims.push_back(claim(
        "N_1 holds for K+5B via n1_3", via_n1_3,
        certified(res) ? "rule " + rule_name(std::get<NpCertificate>(res).rule)
                       : std::get<Inapplicable>(res).blocking));
    FamilySolution sol = make_solution(
        FamilyId::ex5_2, {{"degree", 3}, {"branch_degree", 9}},
        std::move(ctx), std::move(claims));
    require_verified(sol);
    out.push_back(std::move(sol));
  }
  return out;
}

}  // namespace npcert
