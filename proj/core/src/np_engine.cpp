#include "npcert/np_engine.hpp"

#include <algorithm>

namespace npcert {

namespace {

Hypothesis make_hyp(std::string name, std::string detail, bool holds,
                    std::string provenance) {
  return Hypothesis{std::move(name), std::move(detail), holds,
                    std::move(provenance)};
}

// Smallest integer r with r > q.
Int strictly_above(const Rat& q) {
  const Int c = ceil_rat(q);
  return (Rat(c) == q) ? c + 1 : c;
}

}  // namespace

std::string rule_name(RuleId id) {
  switch (id) {
    case RuleId::n0_1: return "n0_1";
    case RuleId::n0_2: return "n0_2";
    case RuleId::n0_3: return "n0_3";
    case RuleId::n0_4: return "n0_4";
    case RuleId::n1_0: return "n1_0";
    case RuleId::n1_1: return "n1_1";
    case RuleId::n1_2: return "n1_2";
    case RuleId::n1_3: return "n1_3";
    case RuleId::n1_5: return "n1_5";
    case RuleId::main5: return "main5";
    case RuleId::main51: return "main51";
    case RuleId::main6: return "main6";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (RuleId id : {RuleId::n0_1, RuleId::n0_2, RuleId::n0_3, RuleId::n0_4,
                    RuleId::n1_0, RuleId::n1_1, RuleId::n1_2, RuleId::n1_3,
                    RuleId::n1_5, RuleId::main5, RuleId::main51, RuleId::main6})
    if (rule_name(id) == name) return id;
  return std::nullopt;
}

std::string RuleAttempt::blocking() const {
  for (const Hypothesis& h : hypotheses)
    if (!h.holds) return h.name;
  return "";
}

SurfaceContext::SurfaceContext(CyclicCover cover, PullbackClass b,
                               PullbackClass k)
    : cover_(std::move(cover)),
      b_(std::move(b)),
      k_(std::move(k)),
      cache_(std::make_shared<Cache>()) {}

SurfaceContext SurfaceContext::create(const CyclicCover& cover,
                                      const DivisorClass& b_base) {
  SurfaceContext ctx(cover, PullbackClass(cover, b_base),
                     canonical_of_cover(cover));
  ctx.b2_ = pullback_intersect(ctx.b_, ctx.b_);
  ctx.bk_ = pullback_intersect(ctx.b_, ctx.k_);
  ctx.k2_ = pullback_intersect(ctx.k_, ctx.k_);
  ctx.invariants_ = surface_invariants(cover);

  const bool ample = is_ample_pullback(ctx.b_);
  const bool bpf = is_bpf_pullback(ctx.b_);
  if (ample && bpf && ctx.b2_ <= 1)
    throw EngineError("B^2 <= 1 is inconsistent with B ample and base point "
                      "free on a surface of general type");

  ctx.k_plus_b_ = (ample && ctx.b2_ >= 2)
                      ? k_plus_b_bpf(cover, ctx.b_)
                      : BpfCheck{false, "B not ample"};
  ctx.slope_ = best_slope_bound(ctx.b2_, ctx.bk_);
  if (ctx.b2_ > 0) {
    Int n = ctx.bk_ > 0 ? ceil_rat(Rat(ctx.bk_, ctx.b2_)) : Int(2);
    if (n < 2) n = 2;
    ctx.slope_n_ = n;
  }

  ctx.standing_ = {
      make_hyp("B ample", "B = " + ctx.b_.str(), ample, "cone criterion"),
      make_hyp("B base point free", "B = " + ctx.b_.str(), bpf,
               "nef = bpf on toric base"),
      make_hyp("B^2 >= 2", "B^2 = " + str(ctx.b2_), ctx.b2_ >= 2,
               "integer comparison"),
      make_hyp("K nef (X minimal)", "K = " + ctx.k_.str(),
               ctx.invariants_.minimal_certified, "cone criterion"),
      make_hyp("K^2 > 0 (general type)", "K^2 = " + str(ctx.k2_),
               ctx.invariants_.general_type_certified, "cone criterion"),
      make_hyp("K+B base point free",
               "provenance: " + ctx.k_plus_b_.provenance, ctx.k_plus_b_.holds,
               ctx.k_plus_b_.provenance),
  };
  ctx.assumptions_ = {
      "branch divisor taken as a smooth member of |" +
          (cover.degree() * cover.branch_class()).str() +
          "|; machine-checked surrogate: the system is ample and base point "
          "free",
      "minimality and general type certified numerically: K nef and K^2 > 0",
  };
  return ctx;
}

Int SurfaceContext::h1_multiple(const Int& l) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->h1.find(l);
    if (it != cache_->h1.end()) return it->second;
  }
  const Int value = cohomology_cover(l * b_).h1;
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->h1.emplace(l, value);
  return value;
}

bool SurfaceContext::standing_ok() const {
  return std::all_of(standing_.begin(), standing_.end(),
                     [](const Hypothesis& h) { return h.holds; });
}

namespace {

Hypothesis gate_h1(const SurfaceContext& ctx, const Int& mult) {
  const Int v = ctx.h1_multiple(mult);
  return make_hyp("h1(" + str(mult) + "B) = 0", "h1 = " + str(v), v == 0,
                  "direct computation");
}

Hypothesis regular_hyp(const SurfaceContext& ctx) {
  return make_hyp("X regular (q = 0)", "q = " + str(ctx.q()),
                  ctx.q() == 0, "pushforward cohomology");
}

Hypothesis pg_hyp(const SurfaceContext& ctx) {
  return make_hyp("p_g >= 3", "p_g = " + str(ctx.p_g()), ctx.p_g() >= 3,
                  "pushforward cohomology");
}

Hypothesis k2_hyp(const SurfaceContext& ctx) {
  return make_hyp("K^2 >= 2", "K^2 = " + str(ctx.K2()), ctx.K2() >= 2,
                  "integer comparison");
}

Hypothesis slope_n_hyp(const SurfaceContext& ctx) {
  const Int& n = ctx.slope_n();
  const bool ok = n >= 2 && n * ctx.B2() >= ctx.BK();
  return make_hyp("B^2 >= (1/n)(B.K)",
                  "n = " + str(n) + ", B^2 = " + str(ctx.B2()) +
                      ", B.K = " + str(ctx.BK()),
                  ok, "integer comparison");
}

Hypothesis slope_hyp(const SurfaceContext& ctx) {
  const bool ok = ctx.slope().has_value();
  return make_hyp("B^2 >= (a/b)(B.K) for some 0 < a < b",
                  ok ? "a/b = " + ctx.slope()->str() + ", B^2 = " +
                           str(ctx.B2()) + ", B.K = " + str(ctx.BK())
                     : "no usable a/b",
                  ok, "exact rational arithmetic");
}

// Numerical-class comparison standing in for "2K != cB": numerical
// inequality implies linear inequality. Numerical equality leaves linear
// equivalence undecided, so that branch is reported unusable.
Hypothesis class_neq_hyp(const SurfaceContext& ctx, const Int& c) {
  const DivisorClass lhs = 2 * ctx.K().base_class();
  const DivisorClass rhs = c * ctx.B().base_class();
  const bool neq = !(lhs == rhs);
  return make_hyp("2K != " + str(c) + "B",
                  neq ? "numerically distinct: 2K = " + lhs.str() + ", " +
                            str(c) + "B = " + rhs.str()
                      : "numerically equal; linear equivalence undecided",
                  neq, "numerical class comparison in the pullback lattice");
}

RuleAttempt finish(RuleAttempt a) {
  a.succeeded = std::all_of(a.hypotheses.begin(), a.hypotheses.end(),
                            [](const Hypothesis& h) { return h.holds; });
  if (!a.succeeded) a.r_bound.reset();
  return a;
}

// ---- N0 rules --------------------------------------------------------------

RuleAttempt try_n0_4(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n0_4};
  a.n_used = ctx.slope_n();
  a.hypotheses = {regular_hyp(ctx), pg_hyp(ctx), k2_hyp(ctx),
                  slope_n_hyp(ctx), gate_h1(ctx, 2 * r - 2)};
  const Int bound = ctx.slope_n() + 1;
  a.hypotheses.push_back(make_hyp("r >= n+1",
                                  "r = " + str(r) + ", n+1 = " + str(bound),
                                  r >= bound, "integer comparison"));
  a.r_bound = bound < 3 ? Int(3) : bound;
  return finish(std::move(a));
}

RuleAttempt try_n0_3(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n0_3};
  a.hypotheses = {regular_hyp(ctx), pg_hyp(ctx), k2_hyp(ctx), slope_hyp(ctx)};
  if (ctx.slope()) {
    const Int& sa = ctx.slope()->a;
    const Int& sb = ctx.slope()->b;
    const Rat lhs = Rat((2 * r - 2) * sa * sa, sb * sb) +
                    Rat((2 * r - 4) * sa, sb);
    a.hypotheses.push_back(
        make_hyp("(2r-2)a^2/b^2 + (2r-4)a/b >= 2", "lhs = " + str(lhs),
                 lhs >= 2, "exact rational arithmetic"));
    Int bound = ceil_rat(Rat(sa + sb, sa));
    if (bound < 3) bound = 3;
    a.r_bound = bound;
  }
  a.hypotheses.push_back(gate_h1(ctx, 2 * r - 2));
  return finish(std::move(a));
}

RuleAttempt try_n0_2(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n0_2};
  a.n_used = ctx.slope_n();
  a.hypotheses = {slope_n_hyp(ctx), gate_h1(ctx, 2 * r - 2)};
  const Int bound = ctx.slope_n() + 2;
  a.hypotheses.push_back(make_hyp("r >= n+2",
                                  "r = " + str(r) + ", n+2 = " + str(bound),
                                  r >= bound, "integer comparison"));
  a.r_bound = bound < 3 ? Int(3) : bound;
  return finish(std::move(a));
}

RuleAttempt try_n0_1(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n0_1};
  a.hypotheses = {slope_hyp(ctx)};
  if (ctx.slope()) {
    const Int& sa = ctx.slope()->a;
    const Int& sb = ctx.slope()->b;
    const Rat threshold = Rat(sb, sa) + Rat(3, 2);
    bool cond = Rat(r) > threshold;
    std::string detail = "r = " + str(r) + ", b/a + 3/2 = " + str(threshold);
    if (!cond && Rat(r) == threshold) {
      Hypothesis neq = class_neq_hyp(ctx, 2 * r - 3);
      cond = neq.holds;
      detail += "; equality branch: " + neq.detail;
    }
    a.hypotheses.push_back(make_hyp(
        "r > b/a + 3/2 (or equality with 2K != (2r-3)B)", detail, cond,
        "exact rational arithmetic"));
    Int bound = strictly_above(threshold);
    if (bound < 3) bound = 3;
    a.r_bound = bound;
  }
  a.hypotheses.push_back(gate_h1(ctx, 2 * r - 2));
  return finish(std::move(a));
}

// ---- N1 rules --------------------------------------------------------------

RuleAttempt try_n1_3(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n1_3};
  a.n_used = ctx.slope_n();
  a.hypotheses = {regular_hyp(ctx), pg_hyp(ctx), k2_hyp(ctx),
                  slope_n_hyp(ctx), gate_h1(ctx, 2 * r - 3)};
  const Int bound = ctx.slope_n() + 2;
  a.hypotheses.push_back(make_hyp("r >= n+2",
                                  "r = " + str(r) + ", n+2 = " + str(bound),
                                  r >= bound, "integer comparison"));
  a.r_bound = bound < 3 ? Int(3) : bound;
  return finish(std::move(a));
}

RuleAttempt try_n1_2(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n1_2};
  a.hypotheses = {regular_hyp(ctx), pg_hyp(ctx), k2_hyp(ctx), slope_hyp(ctx)};
  if (ctx.slope()) {
    const Int& sa = ctx.slope()->a;
    const Int& sb = ctx.slope()->b;
    const Rat threshold = Rat(sb, sa) + Rat(3, 2);
    // The statement's inequality and the one its proof also uses are both
    // checked and recorded; they coincide for integer r only when
    // 2r-3 > 2b/a.
    a.hypotheses.push_back(make_hyp(
        "r > b/a + 3/2",
        "r = " + str(r) + ", b/a + 3/2 = " + str(threshold), Rat(r) > threshold,
        "exact rational arithmetic"));
    a.hypotheses.push_back(make_hyp(
        "(2r-3)a/b > 2",
        "(2r-3)a = " + str((2 * r - 3) * sa) + ", 2b = " + str(2 * sb),
        (2 * r - 3) * sa > 2 * sb, "exact rational arithmetic"));
    Int bound = strictly_above(threshold);
    const Int bound2 = strictly_above(Rat(2 * sb + 3 * sa, 2 * sa));
    if (bound2 > bound) bound = bound2;
    if (bound < 3) bound = 3;
    a.r_bound = bound;
  }
  a.hypotheses.push_back(gate_h1(ctx, 2 * r - 3));
  return finish(std::move(a));
}

RuleAttempt try_n1_5(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n1_5};
  // Inherits the regular-surface hypotheses through Theorem n1_2.
  a.hypotheses = {regular_hyp(ctx), pg_hyp(ctx), k2_hyp(ctx),
                  gate_h1(ctx, r - 1)};
  a.hypotheses.push_back(make_hyp(
      "B^2 >= 2/(2r-3) (B.K)",
      "(2r-3)B^2 = " + str((2 * r - 3) * ctx.B2()) +
          ", 2(B.K) = " + str(2 * ctx.BK()),
      (2 * r - 3) * ctx.B2() >= 2 * ctx.BK(), "integer comparison"));
  a.r_bound = r;
  return finish(std::move(a));
}

RuleAttempt try_n1_1(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n1_1};
  a.n_used = ctx.slope_n();
  a.hypotheses = {slope_n_hyp(ctx), gate_h1(ctx, 2 * r - 3)};
  const Int& n = ctx.slope_n();
  bool cond = r >= n + 3;
  std::string detail = "r = " + str(r) + ", n = " + str(n);
  if (!cond && r == n + 2) {
    Hypothesis neq = class_neq_hyp(ctx, 2 * r - 4);
    cond = neq.holds;
    detail += "; r = n+2 branch: " + neq.detail;
  }
  a.hypotheses.push_back(make_hyp(
      "r >= n+3 (or r = n+2 with 2K != (2r-4)B)", detail, cond,
      "integer comparison"));
  const bool neq_at_n2 =
      !(2 * ctx.K().base_class() == (2 * n) * ctx.B().base_class());
  Int bound = neq_at_n2 ? n + 2 : n + 3;
  if (bound < 3) bound = 3;
  a.r_bound = bound;
  return finish(std::move(a));
}

RuleAttempt try_n1_0(const SurfaceContext& ctx, const Int& r) {
  RuleAttempt a{RuleId::n1_0};
  a.hypotheses = {slope_hyp(ctx)};
  if (ctx.slope()) {
    const Int& sa = ctx.slope()->a;
    const Int& sb = ctx.slope()->b;
    const Rat threshold = Rat(sb, sa) + 2;
    bool cond = Rat(r) > threshold;
    std::string detail = "r = " + str(r) + ", b/a + 2 = " + str(threshold);
    if (!cond && Rat(r) == threshold) {
      Hypothesis neq = class_neq_hyp(ctx, 2 * r - 4);
      cond = neq.holds;
      detail += "; equality branch: " + neq.detail;
    }
    a.hypotheses.push_back(make_hyp(
        "r > b/a + 2 (or equality with 2K != (2r-4)B)", detail, cond,
        "exact rational arithmetic"));
    Int bound = strictly_above(threshold);
    if (bound < 3) bound = 3;
    a.r_bound = bound;
  }
  a.hypotheses.push_back(gate_h1(ctx, 2 * r - 3));
  return finish(std::move(a));
}

// ---- N_p (p >= 2) rules ----------------------------------------------------

// Least n in [2, n_max] with the rule's nef class nef and h1((n+1)B) = 0.
std::optional<Int> least_valid_n(const SurfaceContext& ctx, const Int& n_max,
                                 bool two_k_form) {
  for (Int n = 2; n <= n_max; ++n) {
    const PullbackClass nef_class =
        two_k_form ? (n + 1) * ctx.B() - 2 * ctx.K() : n * ctx.B() - ctx.K();
    if (!is_nef_pullback(nef_class)) continue;
    if (ctx.h1_multiple(n + 1) != 0) continue;
    return n;
  }
  return std::nullopt;
}

RuleAttempt try_main(const SurfaceContext& ctx, const Int& r, const Int& p,
                     RuleId rule, const EngineOptions& opts) {
  RuleAttempt a{rule};
  if (rule == RuleId::main6) {
    a.hypotheses = {regular_hyp(ctx), pg_hyp(ctx),
                    make_hyp("B^2 >= 5", "B^2 = " + str(ctx.B2()),
                             ctx.B2() >= 5, "integer comparison")};
  } else {
    const Hypothesis& kb = ctx.standing_hypotheses().back();
    a.hypotheses = {kb};
  }
  const bool two_k_form = (rule != RuleId::main51);
  const char* nef_name =
      two_k_form ? "(n+1)B - 2K nef" : "nB - K nef";
  const auto n = least_valid_n(ctx, opts.n_max, two_k_form);
  a.hypotheses.push_back(make_hyp(
      std::string(nef_name) + " with h1((n+1)B) = 0 for some n <= n_max",
      n ? "least n = " + str(*n) : "no n <= " + str(opts.n_max),
      n.has_value(), "cone criterion + direct computation"));
  if (n) {
    a.n_used = *n;
    Int bound;
    if (rule == RuleId::main6) bound = *n + p + 1;
    else if (rule == RuleId::main5) bound = *n + p + 2;
    else bound = 2 * (*n) + p + 1;
    a.hypotheses.push_back(make_hyp(
        rule == RuleId::main6   ? "r >= n+p+1"
        : rule == RuleId::main5 ? "r >= n+p+2"
                                : "r >= 2n+p+1",
        "r = " + str(r) + ", bound = " + str(bound), r >= bound,
        "integer comparison"));
    a.r_bound = bound < 3 ? Int(3) : bound;
  }
  return finish(std::move(a));
}

CertifyResult assemble(const SurfaceContext& ctx, const Int& p, const Int& r,
                       std::vector<RuleAttempt> attempts) {
  const RuleAttempt* winner = nullptr;
  for (const RuleAttempt& a : attempts)
    if (a.succeeded) {
      if (!winner ||
          (a.r_bound && winner->r_bound && *a.r_bound < *winner->r_bound))
        winner = &a;
    }
  if (!winner) {
    std::string blocking =
        attempts.empty() ? "" : attempts.front().blocking();
    for (const RuleAttempt& a : attempts)
      if (!a.succeeded && blocking.empty()) blocking = a.blocking();
    return Inapplicable{p, r, blocking, std::move(attempts)};
  }
  NpCertificate cert;
  cert.rule = winner->rule;
  cert.p = p;
  cert.r = r;
  cert.r_bound = winner->r_bound.value_or(r);
  cert.n_used = winner->n_used;
  cert.hypotheses = ctx.standing_hypotheses();
  cert.hypotheses.insert(cert.hypotheses.end(), winner->hypotheses.begin(),
                         winner->hypotheses.end());
  cert.assumptions = ctx.assumptions();
  cert.attempts = std::move(attempts);
  return cert;
}

CertifyResult standing_failure(const SurfaceContext& ctx, const Int& p,
                               const Int& r) {
  std::string blocking;
  for (const Hypothesis& h : ctx.standing_hypotheses())
    if (!h.holds) {
      blocking = h.name;
      break;
    }
  return Inapplicable{p, r, "standing hypothesis failed: " + blocking, {}};
}

}  // namespace

CertifyResult certify_N0(const SurfaceContext& ctx, const Int& r) {
  if (r < 3) throw EngineError("certification requires r >= 3");
  if (!ctx.standing_ok()) return standing_failure(ctx, 0, r);
  std::vector<RuleAttempt> attempts;
  // Regular-surface rules first: when applicable they dominate.
  attempts.push_back(try_n0_4(ctx, r));
  attempts.push_back(try_n0_3(ctx, r));
  attempts.push_back(try_n0_2(ctx, r));
  attempts.push_back(try_n0_1(ctx, r));
  // First-success priority, not weakest bound: the order above is the
  // dominance order.
  for (std::size_t i = 0; i < attempts.size(); ++i)
    if (attempts[i].succeeded) {
      std::vector<RuleAttempt> all = attempts;
      std::vector<RuleAttempt> winner_only{attempts[i]};
      CertifyResult res = assemble(ctx, 0, r, std::move(winner_only));
      std::get<NpCertificate>(res).attempts = std::move(all);
      return res;
    }
  return assemble(ctx, 0, r, std::move(attempts));
}

CertifyResult certify_N1(const SurfaceContext& ctx, const Int& r) {
  if (r < 3) throw EngineError("certification requires r >= 3");
  if (!ctx.standing_ok()) return standing_failure(ctx, 1, r);
  std::vector<RuleAttempt> attempts;
  attempts.push_back(try_n1_3(ctx, r));
  attempts.push_back(try_n1_2(ctx, r));
  attempts.push_back(try_n1_5(ctx, r));
  attempts.push_back(try_n1_1(ctx, r));
  attempts.push_back(try_n1_0(ctx, r));
  for (std::size_t i = 0; i < attempts.size(); ++i)
    if (attempts[i].succeeded) {
      std::vector<RuleAttempt> all = attempts;
      std::vector<RuleAttempt> winner_only{attempts[i]};
      CertifyResult res = assemble(ctx, 1, r, std::move(winner_only));
      std::get<NpCertificate>(res).attempts = std::move(all);
      return res;
    }
  return assemble(ctx, 1, r, std::move(attempts));
}

CertifyResult certify_Np(const SurfaceContext& ctx, const Int& r, const Int& p,
                         const EngineOptions& opts) {
  if (r < 3) throw EngineError("certification requires r >= 3");
  if (p < 2) throw EngineError("certify_Np requires p >= 2");
  if (!ctx.standing_ok()) return standing_failure(ctx, p, r);
  std::vector<RuleAttempt> attempts;
  attempts.push_back(try_main(ctx, r, p, RuleId::main6, opts));
  attempts.push_back(try_main(ctx, r, p, RuleId::main5, opts));
  attempts.push_back(try_main(ctx, r, p, RuleId::main51, opts));
  return assemble(ctx, p, r, std::move(attempts));
}

CertifyResult certify(const SurfaceContext& ctx, const Int& r, const Int& p,
                      const EngineOptions& opts) {
  if (p < 0) throw EngineError("p must be >= 0");
  if (p == 0) return certify_N0(ctx, r);
  if (p == 1) return certify_N1(ctx, r);
  return certify_Np(ctx, r, p, opts);
}

std::optional<NpCertificate> min_r_for_Np(const SurfaceContext& ctx,
                                          const Int& p,
                                          const EngineOptions& opts) {
  for (Int r = 3; r <= opts.r_cap; ++r) {
    CertifyResult res = certify(ctx, r, p, opts);
    if (certified(res)) return std::get<NpCertificate>(std::move(res));
  }
  return std::nullopt;
}

}  // namespace npcert
