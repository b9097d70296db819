// npcert: exact-arithmetic certification of N_p bounds for adjoint bundles
// K + rB on cyclic covers of the plane and of Hirzebruch surfaces.
//
// Exit codes: 0 all requested verifications pass; 1 a verification failed;
// 2 input error; 3 internal inconsistency.

#include "npcert/report.hpp"
#include "npcert/spec_file.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>

namespace {

using namespace npcert;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconsistency = 3;

struct OutputOptions {
  bool json_only = false;
};

void emit(const Report& report, const OutputOptions& out) {
  if (out.json_only) {
    std::cout << report.serialize_machine();
    return;
  }
  std::cout << report.human;
  std::cout << "\n--- machine section ---\n" << report.serialize_machine();
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

// ---- describe ---------------------------------------------------------------

Report run_describe(const SurfaceSpec& spec) {
  const SurfaceContext ctx = spec.context();
  const Int n_max = spec.options().n_max;
  Report report;
  report.machine = describe_json(ctx, n_max);
  const json& m = report.machine;
  auto pos_row = [&](const char* key) {
    const json& p = m["positivity"][key];
    return std::string("nef ") + yes_no(p["nef"]) + ", ample " +
           yes_no(p["ample"]) + ", bpf " + yes_no(p["bpf"]);
  };
  auto least = [&](const char* key) {
    return m[key].is_null() ? std::string("none <= " + str(n_max))
                            : m[key].get<std::string>();
  };
  report.human =
      "surface\n" +
      render_table({{"base", m["base"]},
                    {"degree", m["degree"]},
                    {"branch class L", m["branch_class"]},
                    {"B", m["B"]},
                    {"K", m["K"]}}) +
      "invariants\n" +
      render_table({{"B^2", m["B2"]},
                    {"B.K", m["BK"]},
                    {"K^2", m["K2"]},
                    {"p_g", m["p_g"]},
                    {"q", m["q"]}}) +
      "positivity\n" +
      render_table({{"B", pos_row("B")},
                    {"K", pos_row("K")},
                    {"K+B", pos_row("K+B")}}) +
      "least nef shifts\n" +
      render_table({{"(n+1)B-2K nef", least("least_n_nef_np1B_minus_2K")},
                    {"nB-K nef", least("least_n_nef_nB_minus_K")}});
  return report;
}

// ---- coh --------------------------------------------------------------------

Report run_coh(const SurfaceSpec& spec, const std::vector<std::string>& coords,
               const Int& t_min, const Int& t_max) {
  if (t_max < t_min) throw SpecError("twist range is empty (t_max < t_min)");
  const CyclicCover cover = spec.cover();
  DivisorClass d = DivisorClass::zero(spec.base);
  if (!coords.empty()) {
    json arr = json::array();
    for (const std::string& c : coords) arr.push_back(c);
    d = [&] {
      if (spec.base.is_plane()) {
        if (arr.size() != 1)
          throw SpecError("--class: plane classes have one coordinate");
        return DivisorClass(spec.base, int_from_json(arr[0], "--class[0]"));
      }
      if (arr.size() != 2)
        throw SpecError("--class: Hirzebruch classes have coordinates c0 f");
      return DivisorClass(spec.base, int_from_json(arr[0], "--class[0]"),
                          int_from_json(arr[1], "--class[1]"));
    }();
  }
  Report report;
  json rows = json::array();
  std::vector<std::pair<std::string, std::string>> table;
  for (Int t = t_min; t <= t_max; ++t) {
    const PullbackClass cls(cover, d + t * spec.bundle);
    const CohomDims dims = cohomology_cover(cls);
    json row = to_json(dims);
    row["t"] = str(t);
    row["class"] = cls.str();
    rows.push_back(std::move(row));
    table.emplace_back("t = " + str(t) + "  " + cls.str(),
                       "h0 = " + str(dims.h0) + ", h1 = " + str(dims.h1) +
                           ", h2 = " + str(dims.h2));
  }
  report.machine = json{{"cohomology", std::move(rows)}};
  report.human = "cohomology of phi*(D + t B)\n" + render_table(table);
  return report;
}

// ---- certify ----------------------------------------------------------------

std::string human_certificate(const NpCertificate& cert) {
  std::vector<std::pair<std::string, std::string>> rows{
      {"p", str(cert.p)},
      {"r", str(cert.r)},
      {"rule", rule_name(cert.rule)},
      {"rule bound on r", str(cert.r_bound)}};
  if (cert.n_used) rows.emplace_back("n", str(*cert.n_used));
  std::string out = "certified: N_" + str(cert.p) + " holds for K + " +
                    str(cert.r) + "B\n" + render_table(rows) + "hypotheses\n";
  std::vector<std::pair<std::string, std::string>> hyps;
  for (const Hypothesis& h : cert.hypotheses)
    hyps.emplace_back(h.name, (h.holds ? "ok" : "FAIL") + std::string("  (") +
                                  h.detail + ")");
  out += render_table(hyps);
  out += "assumptions\n";
  std::vector<std::pair<std::string, std::string>> assume;
  for (const std::string& a : cert.assumptions) assume.emplace_back("-", a);
  out += render_table(assume);
  return out;
}

std::string human_inapplicable(const Inapplicable& inap) {
  std::string out = "not certified: no rule applies for p = " + str(inap.p) +
                    ", r = " + str(inap.r) + "\n" +
                    render_table({{"blocking", inap.blocking}}) +
                    "attempted rules\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (const RuleAttempt& a : inap.attempts)
    rows.emplace_back(rule_name(a.rule),
                      a.succeeded ? "ok" : "blocked by: " + a.blocking());
  out += render_table(rows);
  return out;
}

int run_certify(const SurfaceSpec& spec, const Int& p,
                const std::optional<Int>& r, const OutputOptions& out) {
  const SurfaceContext ctx = spec.context();
  const EngineOptions opts = spec.options();
  Report report;
  if (r) {
    const CertifyResult res = certify(ctx, *r, p, opts);
    report.machine = to_json(res);
    report.ok = certified(res);
    report.human = report.ok ? human_certificate(std::get<NpCertificate>(res))
                             : human_inapplicable(std::get<Inapplicable>(res));
  } else {
    const auto cert = min_r_for_Np(ctx, p, opts);
    if (cert) {
      report.machine = to_json(*cert);
      report.machine["r_min"] = str(cert->r);
      report.human = "minimal certified twist: r_min = " + str(cert->r) +
                     "\n" + human_certificate(*cert);
    } else {
      report.machine = json{{"certified", false},
                            {"p", str(p)},
                            {"r_cap", str(opts.r_cap)}};
      report.ok = false;
      report.human = "not certified: no rule applies for any r <= " +
                     str(opts.r_cap) + "\n";
    }
  }
  emit(report, out);
  return report.ok ? kExitOk : kExitVerifyFailed;
}

// ---- family -----------------------------------------------------------------

Report family_report(const std::vector<FamilySolution>& sols,
                     const std::vector<BoundaryDiscrepancy>& boundary) {
  Report report;
  json arr = json::array();
  std::vector<std::pair<std::string, std::string>> rows;
  for (const FamilySolution& sol : sols) {
    arr.push_back(to_json(sol));
    std::string params;
    for (const auto& [key, value] : sol.parameters)
      params += (params.empty() ? "" : ", ") + key + " = " + str(value);
    rows.emplace_back(family_name(sol.family) + "(" + params + ")",
                      sol.all_verified() ? "verified" : "FAILED");
    report.ok = report.ok && sol.all_verified();
  }
  json disc = json::array();
  for (const BoundaryDiscrepancy& b : boundary) {
    disc.push_back(json{{"b", str(b.b)}, {"m", str(b.m)}, {"detail", b.detail}});
    rows.emplace_back("boundary (b = " + str(b.b) + ", m = " + str(b.m) + ")",
                      b.detail);
  }
  report.machine = json{{"solutions", std::move(arr)},
                        {"boundary_discrepancies", std::move(disc)}};
  report.human = "family solutions\n" + render_table(rows);
  return report;
}

int run_family(const std::string& family, const Int& n, const Int& b_max,
               const Int& b, const Int& m, const Int& degree,
               const OutputOptions& out) {
  const auto id = family_from_name(family);
  if (!id) throw FamilyError("unknown family \"" + family + "\"");
  Report report;
  switch (*id) {
    case FamilyId::ex5_1:
    case FamilyId::ex5_2: {
      std::vector<FamilySolution> all = build_classics();
      std::vector<FamilySolution> keep;
      for (FamilySolution& sol : all)
        if (sol.family == *id) keep.push_back(std::move(sol));
      report = family_report(keep, {});
      break;
    }
    case FamilyId::ex5_3: {
      const EnumerationResult res = enumerate_ex5_3(n, b_max);
      report = family_report(res.solutions, res.boundary_discrepancies);
      break;
    }
    case FamilyId::ex5_4: {
      const EnumerationResult res = enumerate_ex5_4(n, b_max);
      report = family_report(res.solutions, res.boundary_discrepancies);
      break;
    }
    case FamilyId::ex5_5:
      report = family_report({build_ex5_5(degree, b, m)}, {});
      break;
    case FamilyId::ex5_7:
      report = family_report({build_ex5_7(n, m)}, {});
      break;
  }
  emit(report, out);
  return report.ok ? kExitOk : kExitVerifyFailed;
}

// ---- verify-paper -----------------------------------------------------------

struct PinnedClaim {
  std::string name;
  Int expected;
  std::function<Int()> compute;
};

// The machine-verified corpus: every pinned value and regeneration protocol
// from the worked examples. Each claim computes one integer and compares it
// against the pinned expectation.
std::vector<PinnedClaim> build_claims() {
  std::vector<PinnedClaim> claims;
  auto add = [&](std::string name, Int expected, std::function<Int()> fn) {
    claims.push_back({std::move(name), std::move(expected), std::move(fn)});
  };

  auto classics = std::make_shared<std::vector<FamilySolution>>();
  auto classic_ctx = [classics](std::size_t i) -> const SurfaceContext& {
    if (classics->empty()) *classics = build_classics();
    return (*classics)[i].context;
  };

  add("ex5_1.B2", 2, [=] { return classic_ctx(0).B2(); });
  add("ex5_1.BK", 4, [=] { return classic_ctx(0).BK(); });
  add("ex5_1.K2", 8, [=] { return classic_ctx(0).K2(); });
  add("ex5_1.p_g", 6, [=] { return classic_ctx(0).p_g(); });
  add("ex5_1.q", 0, [=] { return classic_ctx(0).q(); });
  add("ex5_1.h1_B", 0, [=] { return classic_ctx(0).h1_multiple(1); });
  add("ex5_1.N0_r_min", 3, [=] {
    const auto cert = min_r_for_Np(classic_ctx(0), 0);
    return cert ? cert->r : Int(-1);
  });

  add("ex5_2.B2", 3, [=] { return classic_ctx(1).B2(); });
  add("ex5_2.BK", 9, [=] { return classic_ctx(1).BK(); });
  add("ex5_2.p_g", 11, [=] { return classic_ctx(1).p_g(); });
  add("ex5_2.h1_lB_l1_10", 0, [=] {
    Int total = 0;
    for (Int l = 1; l <= 10; ++l) total += classic_ctx(1).h1_multiple(l);
    return total;
  });
  add("ex5_2.N1_r_min", 5, [=] {
    const auto cert = min_r_for_Np(classic_ctx(1), 1);
    return cert ? cert->r : Int(-1);
  });
  add("ex5_2.N1_rule_n1_3", 1, [=] {
    const auto cert = min_r_for_Np(classic_ctx(1), 1);
    return Int(cert && cert->rule == RuleId::n1_3 ? 1 : 0);
  });

  for (Int n = 2; n <= 5; ++n) {
    const std::string tag = "ex5_3.n" + str(n);
    add(tag + ".verified_b30", 1, [n] {
      const EnumerationResult res = enumerate_ex5_3(n, 30);
      if (res.solutions.empty()) return Int(0);
      for (const FamilySolution& sol : res.solutions)
        if (!sol.all_verified()) return Int(0);
      return Int(1);
    });
    add(tag + ".strict_growth", 1, [n] {
      const auto c10 = enumerate_ex5_3(n, 10).solutions.size();
      const auto c20 = enumerate_ex5_3(n, 20).solutions.size();
      const auto c40 = enumerate_ex5_3(n, 40).solutions.size();
      return Int(c10 < c20 && c20 < c40 ? 1 : 0);
    });
    add("ex5_4.n" + str(n) + ".verified_b30", 1, [n] {
      const EnumerationResult res = enumerate_ex5_4(n, 30);
      if (res.solutions.empty()) return Int(0);
      for (const FamilySolution& sol : res.solutions)
        if (!sol.all_verified()) return Int(0);
      return Int(1);
    });
    add("ex5_4.n" + str(n) + ".interval_nonempty", 1, [n] {
      for (Int b = 2; b <= 30; ++b)
        if (!((n - 1) * b - n + 2 < n * b - n + 1 &&
              n * b - n + 1 < (n + 1) * b - n + 1))
          return Int(0);
      return Int(1);
    });
  }
  add("ex5_3.n2.contains_b4_m5", 1, [] {
    for (const FamilySolution& sol : enumerate_ex5_3(2, 10).solutions)
      if (sol.parameters[1].second == 4 && sol.parameters[2].second == 5)
        return Int(1);
    return Int(0);
  });

  for (Int b = 4; b <= 10; b += 2) {
    const Int half = b / 2 + 1;  // n = m with n+m-2 = b
    const std::string tag = "ex5_7.b" + str(b);
    add(tag + ".verified", 1, [half] {
      return Int(build_ex5_7(half, half).all_verified() ? 1 : 0);
    });
    add(tag + ".B2", 6,
        [half] { return build_ex5_7(half, half).context.B2(); });
    add(tag + ".BK", 3 * b,  // 2(r+s) = 2(b/2 + b) = 3b
        [half] { return build_ex5_7(half, half).context.BK(); });
  }
  add("ex5_7.b4.h0_2K_minus_3B", 5, [] {
    const FamilySolution sol = build_ex5_7(3, 3);
    return cohomology_cover(2 * sol.context.K() - 3 * sol.context.B()).h0;
  });

  add("lemma_1_2.corpus", 1, [] {
    for (Int n = 2; n <= 3; ++n)
      for (const FamilySolution& sol : enumerate_ex5_3(n, 12).solutions) {
        const auto& ctx = sol.context;
        if (!ctx.slope()) return Int(0);
        const auto verdict =
            lemma_1_2_check(*ctx.slope(), ctx.cover(), ctx.B());
        if (!verdict || !*verdict) return Int(0);
      }
    return Int(1);
  });
  add("lemma_1_1.corpus", 1, [] {
    for (const FamilySolution& sol : enumerate_ex5_3(2, 12).solutions) {
      const auto& ctx = sol.context;
      if (!ctx.slope()) return Int(0);
      const Int m0 = ceil_rat(Rat(ctx.slope()->b, ctx.slope()->a)) + 1;
      const auto prop =
          h1_vanishing_from(m0, *ctx.slope(), ctx.cover(), ctx.B());
      if (!prop) continue;  // rule inapplicable on this member: no claim
      for (Int l = m0; l <= m0 + 10; ++l)
        if (ctx.h1_multiple(l) != 0) return Int(0);
    }
    return Int(1);
  });

  return claims;
}

int run_verify_paper(const std::string& corrupt, bool list_only,
                     const std::string& seed_dir, const OutputOptions& out) {
  std::vector<PinnedClaim> claims = build_claims();
  if (!corrupt.empty()) {
    bool found = false;
    for (PinnedClaim& c : claims)
      if (c.name == corrupt) {
        ++c.expected;
        found = true;
      }
    if (!found) throw SpecError("--corrupt: unknown claim \"" + corrupt + "\"");
  }

  Report report;
  json arr = json::array();
  std::vector<std::pair<std::string, std::string>> rows;

  if (list_only) {
    for (const PinnedClaim& c : claims) arr.push_back(c.name);
    report.machine = json{{"claims", std::move(arr)}};
    emit(report, out);
    return kExitOk;
  }

  std::string first_failure;
  for (const PinnedClaim& c : claims) {
    if (!corrupt.empty() && !first_failure.empty()) break;  // self-test mode
    const Int got = c.compute();
    const bool ok = got == c.expected;
    arr.push_back(json{{"name", c.name},
                       {"expected", str(c.expected)},
                       {"got", str(got)},
                       {"ok", ok}});
    rows.emplace_back(c.name, ok ? "ok" : "FAIL (got " + str(got) +
                                              ", expected " + str(c.expected) +
                                              ")");
    if (!ok && first_failure.empty()) first_failure = c.name;
    report.ok = report.ok && ok;
  }

  if (!seed_dir.empty()) {
    // Bulk-validate every spec file in the directory: it must parse and its
    // model must satisfy the engine's standing hypotheses.
    namespace fs = std::filesystem;
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(seed_dir))
      if (entry.path().extension() == ".json") paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    for (const fs::path& path : paths) {
      const SurfaceContext ctx = SurfaceSpec::load(path.string()).context();
      const bool ok = ctx.standing_ok();
      arr.push_back(json{{"name", "spec." + path.filename().string()},
                         {"expected", "standing hypotheses hold"},
                         {"got", ok ? "hold" : "violated"},
                         {"ok", ok}});
      rows.emplace_back("spec " + path.filename().string(),
                        ok ? "ok" : "FAIL (standing hypotheses violated)");
      report.ok = report.ok && ok;
    }
  }

  report.machine = json{{"claims", std::move(arr)}, {"ok", report.ok}};
  if (!first_failure.empty()) report.machine["first_failure"] = first_failure;
  report.human = "paper corpus verification\n" + render_table(rows) +
                 (report.ok ? "all claims hold\n"
                            : "FAILED claim: " + first_failure + "\n");
  emit(report, out);
  return report.ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact certification of N_p syzygy bounds for adjoint bundles K + rB "
      "on cyclic covers of the plane and of Hirzebruch surfaces"};
  app.require_subcommand(1);

  OutputOptions out;
  app.add_flag("--json", out.json_only, "machine-readable output only");

  std::string spec_path;
  std::string n_max_flag, r_cap_flag;

  auto add_spec_arg = [&](CLI::App* cmd) {
    cmd->add_option("spec", spec_path, "surface definition file")->required();
  };
  auto add_engine_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n-max", n_max_flag, "override the engine's n search bound");
    cmd->add_option("--r-cap", r_cap_flag, "override the engine's r search cap");
  };
  auto load_spec = [&]() {
    SurfaceSpec spec = SurfaceSpec::load(spec_path);
    if (!n_max_flag.empty())
      spec.n_max = int_from_json(json(n_max_flag), "--n-max");
    if (!r_cap_flag.empty())
      spec.r_cap = int_from_json(json(r_cap_flag), "--r-cap");
    return spec;
  };

  CLI::App* describe = app.add_subcommand("describe", "invariants and positivity of a model");
  add_spec_arg(describe);
  add_engine_flags(describe);

  CLI::App* coh = app.add_subcommand("coh", "cohomology of phi*(D + t B) over a twist range");
  add_spec_arg(coh);
  std::vector<std::string> coh_class;
  std::string t_min_flag = "0", t_max_flag = "0";
  coh->add_option("--class", coh_class, "base-class coordinates of D (default 0)");
  coh->add_option("--t-min", t_min_flag, "first twist");
  coh->add_option("--t-max", t_max_flag, "last twist");

  CLI::App* certify_cmd = app.add_subcommand("certify", "certify N_p for K + rB, or find the minimal r");
  add_spec_arg(certify_cmd);
  add_engine_flags(certify_cmd);
  std::string p_flag, r_flag;
  certify_cmd->add_option("--p", p_flag, "syzygy level p >= 0")->required();
  certify_cmd->add_option("--r", r_flag, "twist r >= 3; omit to search for the minimum");

  CLI::App* family_cmd = app.add_subcommand("family", "regenerate and verify an example family");
  std::string family_id;
  std::string n_flag = "2", b_max_flag = "10", b_flag = "4", m_flag = "5",
              degree_flag = "2";
  family_cmd->add_option("id", family_id, "ex5_1 | ex5_2 | ex5_3 | ex5_4 | ex5_5 | ex5_7")
      ->required();
  family_cmd->add_option("--n", n_flag, "family parameter n (ex5_3/ex5_4/ex5_7)");
  family_cmd->add_option("--b-max", b_max_flag, "enumeration bound (ex5_3/ex5_4)");
  family_cmd->add_option("--b", b_flag, "bundle parameter b (ex5_5)");
  family_cmd->add_option("--m", m_flag, "branch parameter m (ex5_5/ex5_7)");
  family_cmd->add_option("--degree", degree_flag, "cover degree (ex5_5)");

  CLI::App* verify = app.add_subcommand("verify-paper", "verify every pinned claim of the worked-example corpus");
  for (CLI::App* sub : {describe, coh, certify_cmd, family_cmd, verify})
    sub->fallthrough();  // lets --json appear after the subcommand

  std::string corrupt_claim, seed_dir;
  bool list_claims = false;
  verify->add_option("--seed-corpus", seed_dir, "directory of spec files to bulk-validate");
  verify->add_flag("--list", list_claims, "list claim names without running them");
  verify->add_option("--corrupt", corrupt_claim, "perturb one pinned value (self-test)")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);

    if (describe->parsed()) {
      emit(run_describe(load_spec()), out);
      return kExitOk;
    }
    if (coh->parsed()) {
      emit(run_coh(load_spec(), coh_class,
                   int_from_json(json(t_min_flag), "--t-min"),
                   int_from_json(json(t_max_flag), "--t-max")),
           out);
      return kExitOk;
    }
    if (certify_cmd->parsed()) {
      std::optional<Int> r;
      if (!r_flag.empty()) r = int_from_json(json(r_flag), "--r");
      return run_certify(load_spec(), int_from_json(json(p_flag), "--p"), r,
                         out);
    }
    if (family_cmd->parsed()) {
      return run_family(family_id, int_from_json(json(n_flag), "--n"),
                        int_from_json(json(b_max_flag), "--b-max"),
                        int_from_json(json(b_flag), "--b"),
                        int_from_json(json(m_flag), "--m"),
                        int_from_json(json(degree_flag), "--degree"), out);
    }
    if (verify->parsed())
      return run_verify_paper(corrupt_claim, list_claims, seed_dir, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  } catch (const FamilyInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistency;
  } catch (const CohomologyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistency;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
