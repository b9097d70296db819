// Acceptance gate: one pass/fail line per criterion. Usage:
//   acceptance <path-to-cli> <path-to-spec-dir>

#include "npcert/families.hpp"
#include "npcert/report.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace npcert;
using nlohmann::json;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (ok) {
    std::cout << "PASS criterion " << number << ": " << title << "\n";
  } else {
    std::cout << "FAIL criterion " << number << ": " << title
              << (detail.empty() ? "" : " -- " + detail) << "\n";
    ++g_failures;
  }
}

struct CliResult {
  int exit_code;
  std::string output;
};

std::string g_cli;

CliResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot spawn " + cmd);
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

SurfaceContext classic(int which) {
  const BaseSurface p2 = BaseSurface::plane();
  if (which == 1)
    return SurfaceContext::create(
        CyclicCover::create(p2, 2, DivisorClass(p2, 5)), DivisorClass(p2, 1));
  return SurfaceContext::create(CyclicCover::create(p2, 3, DivisorClass(p2, 3)),
                                DivisorClass(p2, 1));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 2) g_cli = argv[1];
  const std::string spec_dir = argc >= 3 ? argv[2] : "data/specs";

  criterion(1, "plane double cover pinned values and N0 at r = 3",
            [](std::string& detail) {
              const SurfaceContext ctx = classic(1);
              if (ctx.B2() != 2 || ctx.BK() != 4 || ctx.K2() != 8 ||
                  ctx.p_g() != 6 || ctx.q() != 0 || ctx.h1_multiple(1) != 0) {
                detail = "invariant mismatch";
                return false;
              }
              const auto cert = min_r_for_Np(ctx, 0);
              if (!cert || cert->r != 3) {
                detail = "N0 not certified at exactly r = 3";
                return false;
              }
              return true;
            });

  criterion(2, "plane triple cover pinned values and N1 at r = 5 via n1_3",
            [](std::string& detail) {
              const SurfaceContext ctx = classic(2);
              if (ctx.B2() != 3 || ctx.BK() != 9) {
                detail = "invariant mismatch";
                return false;
              }
              for (Int l = 1; l <= 10; ++l)
                if (ctx.h1_multiple(l) != 0) {
                  detail = "h1(" + str(l) + "B) != 0";
                  return false;
                }
              const auto cert = min_r_for_Np(ctx, 1);
              if (!cert || cert->r != 5 || cert->rule != RuleId::n1_3) {
                detail = "N1 not certified at r = 5 via n1_3";
                return false;
              }
              return true;
            });

  criterion(3, "ex5_3 regeneration with verified strict nef claims",
            [](std::string& detail) {
              for (Int n = 2; n <= 5; ++n) {
                const EnumerationResult res = enumerate_ex5_3(n, 30);
                if (res.solutions.empty()) {
                  detail = "empty at n = " + str(n);
                  return false;
                }
                for (const FamilySolution& sol : res.solutions)
                  if (!sol.all_verified()) {
                    detail = "verification failure at n = " + str(n);
                    return false;
                  }
                const auto c10 = enumerate_ex5_3(n, 10).solutions.size();
                const auto c20 = enumerate_ex5_3(n, 20).solutions.size();
                const auto c40 = enumerate_ex5_3(n, 40).solutions.size();
                if (!(c10 < c20 && c20 < c40)) {
                  detail = "counts not strictly growing at n = " + str(n);
                  return false;
                }
              }
              return true;
            });

  criterion(4, "ex5_4 regeneration and interval nonemptiness",
            [](std::string& detail) {
              for (Int n = 2; n <= 5; ++n) {
                const EnumerationResult res = enumerate_ex5_4(n, 30);
                if (res.solutions.empty()) {
                  detail = "empty at n = " + str(n);
                  return false;
                }
                for (const FamilySolution& sol : res.solutions)
                  if (!sol.all_verified()) {
                    detail = "verification failure at n = " + str(n);
                    return false;
                  }
                const auto c10 = enumerate_ex5_4(n, 10).solutions.size();
                const auto c20 = enumerate_ex5_4(n, 20).solutions.size();
                const auto c40 = enumerate_ex5_4(n, 40).solutions.size();
                if (!(c10 < c20 && c20 < c40)) {
                  detail = "counts not strictly growing at n = " + str(n);
                  return false;
                }
                for (Int b = 2; b <= 30; ++b)
                  if (!((n - 1) * b - n + 2 < n * b - n + 1 &&
                        n * b - n + 1 < (n + 1) * b - n + 1)) {
                    detail = "interval empty at b = " + str(b);
                    return false;
                  }
              }
              return true;
            });

  criterion(5, "ex5_7 obstruction family for b_param in {4, 6, 8, 10}",
            [](std::string& detail) {
              for (Int b = 4; b <= 10; b += 2) {
                const Int half = b / 2 + 1;
                const FamilySolution sol = build_ex5_7(half, half);
                const auto& ctx = sol.context;
                const Rat identity = Rat(4 * b, b * b) + Rat(2 * (b - 2), b);
                const Int r = b / 2, s = b;
                const Int h0 = cohomology_cover(2 * ctx.K() - (b - 1) * ctx.B()).h0;
                const Int h2 =
                    cohomology_cover((2 * half - 3) * ctx.B() - ctx.K()).h2;
                if (identity != 2 || ctx.B2() != 6 || ctx.BK() != 2 * (r + s) ||
                    !(ctx.BK() > ctx.B2() && b * ctx.B2() >= 2 * ctx.BK()) ||
                    ctx.h1_multiple(b) != 0 || h0 <= 0 || h2 != h0 ||
                    !sol.all_verified()) {
                  detail = "failure at b_param = " + str(b);
                  return false;
                }
              }
              return true;
            });

  criterion(6, "Riemann-Roch, Serre duality and Kodaira vanishing sweeps",
            [](std::string& detail) {
              const BaseSurface p2 = BaseSurface::plane();
              for (Int e = 0; e <= 2; ++e) {
                const BaseSurface fe = BaseSurface::hirzebruch(e);
                const DivisorClass k = canonical_class(fe);
                for (Int a = -15; a <= 15; ++a)
                  for (Int b = -15; b <= 15; ++b) {
                    const DivisorClass d(fe, a, b);
                    const CohomDims dims = cohomology_base(fe, d);
                    if (dims.chi() != euler_char(fe, d) ||
                        dims.h0 != cohomology_base(fe, k - d).h2) {
                      detail = "failure on F_" + str(e) + " at " + d.str();
                      return false;
                    }
                  }
              }
              const DivisorClass kp = canonical_class(p2);
              for (Int a = -15; a <= 15; ++a) {
                const DivisorClass d(p2, a);
                const CohomDims dims = cohomology_base(p2, d);
                if (dims.chi() != euler_char(p2, d) ||
                    dims.h0 != cohomology_base(p2, kp - d).h2) {
                  detail = "failure on the plane at " + d.str();
                  return false;
                }
              }
              const BaseSurface f1 = BaseSurface::hirzebruch(1);
              const DivisorClass k1 = canonical_class(f1);
              for (Int a = 1; a <= 20; ++a)
                for (Int b = a + 1; b <= 20; ++b) {
                  const CohomDims dims =
                      cohomology_base(f1, k1 + DivisorClass(f1, a, b));
                  if (dims.h1 != 0 || dims.h2 != 0) {
                    detail = "K-V failure at (" + str(a) + ", " + str(b) + ")";
                    return false;
                  }
                }
              return true;
            });

  criterion(7, "vanishing-lemma soundness over the full family corpus",
            [](std::string& detail) {
              for (Int n = 2; n <= 5; ++n)
                for (Int b = 2; b <= 30; ++b)
                  for (Int m = 1; m <= (n + 1) * b; ++m) {
                    const bool in3 = ex5_3_inequalities(n, b, m);
                    const bool in4 = ex5_4_inequalities(n, b, m);
                    if (!in3 && !in4) continue;
                    const SurfaceContext ctx = double_cover_model(b, m);
                    for (Int mm = 1; mm <= 20; ++mm)
                      for (Int l = 0; l <= 4; ++l) {
                        const auto v =
                            vanishing_van(ctx.cover(), ctx.B(), n, mm, l);
                        const auto v1 =
                            vanishing_van1(ctx.cover(), ctx.B(), n, mm, l);
                        if (!((v && *v) || (v1 && *v1))) continue;
                        const CohomDims dims =
                            cohomology_cover(mm * ctx.B() - l * ctx.K());
                        if ((v && *v && (dims.h1 != 0 || dims.h2 != 0)) ||
                            (v1 && *v1 && (dims.h1 != 0 || dims.h2 != 0))) {
                          detail = "counterexample at n = " + str(n) +
                                   ", (b, m) = (" + str(b) + ", " + str(m) +
                                   "), class " + str(mm) + "B - " + str(l) +
                                   "K";
                          return false;
                        }
                      }
                  }
              return true;
            });

  criterion(8, "h1 propagation and the slope-bound consequence on the corpus",
            [](std::string& detail) {
              for (Int n = 2; n <= 5; ++n)
                for (Int b = 2; b <= 30; ++b)
                  for (Int m = 1; m <= (n + 1) * b; ++m) {
                    if (!ex5_3_inequalities(n, b, m) &&
                        !ex5_4_inequalities(n, b, m))
                      continue;
                    const SurfaceContext ctx = double_cover_model(b, m);
                    if (!ctx.slope()) {
                      detail = "no slope bound at (" + str(b) + ", " + str(m) + ")";
                      return false;
                    }
                    const auto l12 =
                        lemma_1_2_check(*ctx.slope(), ctx.cover(), ctx.B());
                    if (!l12 || !*l12) {
                      detail = "slope consequence fails at (" + str(b) + ", " +
                               str(m) + ")";
                      return false;
                    }
                    const Int m0 =
                        ceil_rat(Rat(ctx.slope()->b, ctx.slope()->a)) + 1;
                    const auto prop = h1_vanishing_from(m0, *ctx.slope(),
                                                        ctx.cover(), ctx.B());
                    if (!prop) continue;  // propagation inapplicable here
                    for (Int l = m0; l <= m0 + 10; ++l)
                      if (ctx.h1_multiple(l) != 0) {
                        detail = "propagation unsound at (" + str(b) + ", " +
                                 str(m) + "), l = " + str(l);
                        return false;
                      }
                  }
              return true;
            });

  criterion(9, "engine monotonicity in p and regular-rule dominance",
            [](std::string& detail) {
              std::vector<SurfaceContext> corpus{classic(1), classic(2)};
              for (Int n = 2; n <= 5; ++n)
                for (Int b = 2; b <= 12; ++b)
                  for (Int m = 1; m <= (n + 1) * b; ++m)
                    if (ex5_3_inequalities(n, b, m) ||
                        ex5_4_inequalities(n, b, m))
                      corpus.push_back(double_cover_model(b, m));
              for (Int h = 4; h <= 10; h += 2)
                corpus.push_back(build_ex5_7(h / 2 + 1, h / 2 + 1).context);
              for (const SurfaceContext& ctx : corpus) {
                Int prev = 0;
                for (Int p = 0; p <= 5; ++p) {
                  const auto cert = min_r_for_Np(ctx, p);
                  if (!cert) {
                    detail = "no certificate for p = " + str(p);
                    return false;
                  }
                  if (cert->r < prev) {
                    detail = "r_min decreased at p = " + str(p);
                    return false;
                  }
                  prev = cert->r;
                  auto bound_of = [&](RuleId id) -> std::optional<Int> {
                    for (const RuleAttempt& x : cert->attempts)
                      if (x.rule == id && x.r_bound) return x.r_bound;
                    return std::nullopt;
                  };
                  const auto check_pair = [&](RuleId reg, RuleId gen) {
                    const auto rb = bound_of(reg), gb = bound_of(gen);
                    return !(rb && gb) || *rb <= *gb;
                  };
                  if (!check_pair(RuleId::n0_4, RuleId::n0_2) ||
                      !check_pair(RuleId::n1_3, RuleId::n1_1) ||
                      !check_pair(RuleId::main6, RuleId::main5)) {
                    detail = "regular rule bound exceeds the general one";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(10, "CLI verify-paper contract and machine round-trip",
            [&](std::string& detail) {
              if (g_cli.empty()) {
                detail = "no CLI path given";
                return false;
              }
              const CliResult good = run_cli("verify-paper --json");
              if (good.exit_code != 0) {
                detail = "verify-paper exited " + std::to_string(good.exit_code);
                return false;
              }
              const json parsed = json::parse(good.output);
              if (parsed.dump(2) + "\n" != good.output) {
                detail = "machine output does not round-trip byte-identically";
                return false;
              }
              const CliResult listed = run_cli("verify-paper --list --json");
              const json claims = json::parse(listed.output)["claims"];
              if (!claims.is_array() || claims.empty()) {
                detail = "claim list unavailable";
                return false;
              }
              for (const json& c : claims) {
                const std::string name = c.get<std::string>();
                const CliResult bad =
                    run_cli("verify-paper --json --corrupt " + name);
                if (bad.exit_code != 1) {
                  detail = "corrupting " + name + " exited " +
                           std::to_string(bad.exit_code);
                  return false;
                }
                const json doc = json::parse(bad.output);
                if (doc["first_failure"] != name) {
                  detail = "corrupting " + name + " named " +
                           doc.value("first_failure", std::string("nothing"));
                  return false;
                }
              }
              const CliResult seeded = run_cli(
                  "verify-paper --json --seed-corpus " + spec_dir);
              if (seeded.exit_code != 0) {
                detail = "seed-corpus validation failed";
                return false;
              }
              return true;
            });

  if (g_failures == 0) {
    std::cout << "all acceptance criteria pass\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}
