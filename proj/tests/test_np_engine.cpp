#include "npcert/np_engine.hpp"

#include <doctest.h>

using namespace npcert;

namespace {

const BaseSurface p2 = BaseSurface::plane();
const BaseSurface f1 = BaseSurface::hirzebruch(1);

SurfaceContext plane_double() {
  return SurfaceContext::create(CyclicCover::create(p2, 2, DivisorClass(p2, 5)),
                                DivisorClass(p2, 1));
}
SurfaceContext plane_triple() {
  return SurfaceContext::create(CyclicCover::create(p2, 3, DivisorClass(p2, 3)),
                                DivisorClass(p2, 1));
}
SurfaceContext hirzebruch_model(const Int& b, const Int& m) {
  return SurfaceContext::create(
      CyclicCover::create(f1, 2, DivisorClass(f1, 3, m + 3)),
      DivisorClass(f1, 1, b));
}

const RuleAttempt* find_attempt(const std::vector<RuleAttempt>& attempts,
                                RuleId rule) {
  for (const RuleAttempt& a : attempts)
    if (a.rule == rule) return &a;
  return nullptr;
}

}  // namespace

TEST_CASE("context caches the standing data") {
  const SurfaceContext ctx = plane_double();
  CHECK(ctx.B2() == 2);
  CHECK(ctx.BK() == 4);
  CHECK(ctx.K2() == 8);
  CHECK(ctx.p_g() == 6);
  CHECK(ctx.q() == 0);
  CHECK(ctx.standing_ok());
  CHECK(ctx.slope_n() == 2);  // least n >= 2 with n B^2 >= B.K
  REQUIRE(ctx.slope());
  CHECK(ctx.slope()->value() == Rat(1, 2));
  CHECK(ctx.h1_multiple(1) == 0);
}

TEST_CASE("N0 certification of the plane double cover at r = 3") {
  const SurfaceContext ctx = plane_double();
  const CertifyResult res = certify_N0(ctx, 3);
  REQUIRE(certified(res));
  const NpCertificate& cert = std::get<NpCertificate>(res);
  CHECK(cert.rule == RuleId::n0_4);
  CHECK(cert.r_bound == 3);
  REQUIRE(cert.n_used);
  CHECK(*cert.n_used == 2);
  // minimal certified twist is exactly 3 (r < 3 is out of scope)
  const auto min_cert = min_r_for_Np(ctx, 0);
  REQUIRE(min_cert);
  CHECK(min_cert->r == 3);
}

TEST_CASE("N1 certification of the plane triple cover at r = 5 via n1_3") {
  const SurfaceContext ctx = plane_triple();
  const CertifyResult res = certify_N1(ctx, 5);
  REQUIRE(certified(res));
  const NpCertificate& cert = std::get<NpCertificate>(res);
  CHECK(cert.rule == RuleId::n1_3);
  REQUIRE(cert.n_used);
  CHECK(*cert.n_used == 3);
  // not certifiable at r = 4 by any route
  const CertifyResult res4 = certify_N1(ctx, 4);
  CHECK_FALSE(certified(res4));
  CHECK_FALSE(std::get<Inapplicable>(res4).blocking.empty());
  const auto min_cert = min_r_for_Np(ctx, 1);
  REQUIRE(min_cert);
  CHECK(min_cert->r == 5);
}

TEST_CASE("N_p via the main theorems on the (b, m) = (4, 5) model") {
  const SurfaceContext ctx = hirzebruch_model(4, 5);
  const auto cert = min_r_for_Np(ctx, 2);
  REQUIRE(cert);
  CHECK(cert->rule == RuleId::main6);
  REQUIRE(cert->n_used);
  CHECK(*cert->n_used == 2);  // (n+1)B-2K = phi*(C0+2f) nef at n = 2
  CHECK(cert->r == *cert->n_used + 2 + 1);
}

TEST_CASE("r below 3 is a hard input error") {
  const SurfaceContext ctx = plane_double();
  CHECK_THROWS_AS(certify_N0(ctx, 2), EngineError);
  CHECK_THROWS_AS(certify_N1(ctx, 2), EngineError);
  CHECK_THROWS_AS(certify(ctx, 2, 3), EngineError);
  CHECK_THROWS_AS(certify(ctx, 5, -1), EngineError);
}

TEST_CASE("winning rule's bound is respected and attempts are retained") {
  const SurfaceContext ctx = plane_triple();
  for (Int r = 3; r <= 8; ++r) {
    const CertifyResult res = certify(ctx, r, 1);
    if (!certified(res)) continue;
    const NpCertificate& cert = std::get<NpCertificate>(res);
    CHECK(cert.r >= cert.r_bound);
    CHECK(cert.attempts.size() == 5);  // every N1 route is recorded
  }
}

TEST_CASE("regular-rule bounds never exceed the general ones") {
  for (Int b = 2; b <= 8; ++b)
    for (Int m = 1; m <= 2 * b; ++m) {
      const SurfaceContext ctx = hirzebruch_model(b, m);
      if (!ctx.standing_ok()) continue;
      const Int r = 12;
      const CertifyResult res0 = certify_N0(ctx, r);
      if (certified(res0)) {
        const auto& attempts = std::get<NpCertificate>(res0).attempts;
        const RuleAttempt* reg = find_attempt(attempts, RuleId::n0_4);
        const RuleAttempt* gen = find_attempt(attempts, RuleId::n0_2);
        if (reg && gen && reg->r_bound && gen->r_bound)
          CHECK(*reg->r_bound <= *gen->r_bound);
      }
      const CertifyResult res1 = certify_N1(ctx, r);
      if (certified(res1)) {
        const auto& attempts = std::get<NpCertificate>(res1).attempts;
        const RuleAttempt* reg = find_attempt(attempts, RuleId::n1_3);
        const RuleAttempt* gen = find_attempt(attempts, RuleId::n1_1);
        if (reg && gen && reg->r_bound && gen->r_bound)
          CHECK(*reg->r_bound <= *gen->r_bound);
      }
      const CertifyResult res2 = certify_Np(ctx, r, 2);
      if (certified(res2)) {
        const auto& attempts = std::get<NpCertificate>(res2).attempts;
        const RuleAttempt* reg = find_attempt(attempts, RuleId::main6);
        const RuleAttempt* gen = find_attempt(attempts, RuleId::main5);
        if (reg && gen && reg->r_bound && gen->r_bound)
          CHECK(*reg->r_bound <= *gen->r_bound);
      }
    }
}

TEST_CASE("min_r_for_Np is nondecreasing in p") {
  for (const SurfaceContext& ctx :
       {plane_double(), plane_triple(), hirzebruch_model(4, 5),
        hirzebruch_model(6, 8)}) {
    Int prev = 0;
    for (Int p = 0; p <= 5; ++p) {
      const auto cert = min_r_for_Np(ctx, p);
      REQUIRE(cert);
      CHECK(cert->r >= prev);
      prev = cert->r;
    }
  }
}

TEST_CASE("certification is upward closed in r on the corpus models") {
  for (const SurfaceContext& ctx :
       {plane_double(), plane_triple(), hirzebruch_model(4, 5)}) {
    for (Int p = 0; p <= 3; ++p) {
      const auto cert = min_r_for_Np(ctx, p);
      REQUIRE(cert);
      for (Int r = cert->r; r <= cert->r + 6; ++r)
        CHECK(certified(certify(ctx, r, p)));
    }
  }
}

TEST_CASE("rule names round-trip") {
  for (RuleId id : {RuleId::n0_1, RuleId::n0_2, RuleId::n0_3, RuleId::n0_4,
                    RuleId::n1_0, RuleId::n1_1, RuleId::n1_2, RuleId::n1_3,
                    RuleId::n1_5, RuleId::main5, RuleId::main51,
                    RuleId::main6}) {
    const auto back = rule_from_name(rule_name(id));
    REQUIRE(back);
    CHECK(*back == id);
  }
  CHECK_FALSE(rule_from_name("n2_9"));
}

TEST_CASE("every hypothesis in a certificate holds and carries provenance") {
  const auto cert = min_r_for_Np(plane_triple(), 1);
  REQUIRE(cert);
  for (const Hypothesis& h : cert->hypotheses) {
    CHECK(h.holds);
    CHECK_FALSE(h.provenance.empty());
    CHECK_FALSE(h.detail.empty());
  }
  CHECK_FALSE(cert->assumptions.empty());
}
