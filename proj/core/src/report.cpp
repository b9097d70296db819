#include "npcert/report.hpp"

namespace npcert {

using nlohmann::json;

json to_json(const CohomDims& dims) {
  return json{{"h0", str(dims.h0)}, {"h1", str(dims.h1)},
              {"h2", str(dims.h2)}};
}

json to_json(const Hypothesis& h) {
  return json{{"name", h.name},
              {"detail", h.detail},
              {"holds", h.holds},
              {"provenance", h.provenance}};
}

json to_json(const RuleAttempt& a) {
  json out{{"rule", rule_name(a.rule)}, {"succeeded", a.succeeded}};
  if (a.n_used) out["n"] = str(*a.n_used);
  if (a.r_bound) out["r_bound"] = str(*a.r_bound);
  json hyps = json::array();
  for (const Hypothesis& h : a.hypotheses) hyps.push_back(to_json(h));
  out["hypotheses"] = std::move(hyps);
  if (!a.succeeded) out["blocking"] = a.blocking();
  return out;
}

json to_json(const NpCertificate& cert) {
  json out{{"certified", true},
           {"rule", rule_name(cert.rule)},
           {"p", str(cert.p)},
           {"r", str(cert.r)},
           {"r_bound", str(cert.r_bound)}};
  if (cert.n_used) out["n"] = str(*cert.n_used);
  json hyps = json::array();
  for (const Hypothesis& h : cert.hypotheses) hyps.push_back(to_json(h));
  out["hypotheses"] = std::move(hyps);
  out["assumptions"] = cert.assumptions;
  json attempts = json::array();
  for (const RuleAttempt& a : cert.attempts) attempts.push_back(to_json(a));
  out["attempts"] = std::move(attempts);
  return out;
}

json to_json(const Inapplicable& inap) {
  json out{{"certified", false},
           {"p", str(inap.p)},
           {"r", str(inap.r)},
           {"blocking", inap.blocking}};
  json attempts = json::array();
  for (const RuleAttempt& a : inap.attempts) attempts.push_back(to_json(a));
  out["attempts"] = std::move(attempts);
  return out;
}

json to_json(const CertifyResult& res) {
  if (certified(res)) return to_json(std::get<NpCertificate>(res));
  return to_json(std::get<Inapplicable>(res));
}

json to_json(const ClaimCheck& c) {
  return json{{"claim", c.claim}, {"verdict", c.verdict},
              {"witness", c.witness}};
}

json to_json(const FamilySolution& sol) {
  json params;
  for (const auto& [key, value] : sol.parameters) params[key] = str(value);
  json claims = json::array();
  for (const ClaimCheck& c : sol.verification) claims.push_back(to_json(c));
  return json{{"family", family_name(sol.family)},
              {"parameters", std::move(params)},
              {"invariants",
               {{"B2", str(sol.context.B2())},
                {"BK", str(sol.context.BK())},
                {"K2", str(sol.context.K2())},
                {"p_g", str(sol.context.p_g())},
                {"q", str(sol.context.q())}}},
              {"verification", std::move(claims)},
              {"all_verified", sol.all_verified()}};
}

json describe_json(const SurfaceContext& ctx, const Int& n_max) {
  const PullbackClass kb = ctx.K() + ctx.B();
  auto positivity = [](const PullbackClass& d) {
    return json{{"nef", is_nef_pullback(d)},
                {"ample", is_ample_pullback(d)},
                {"bpf", is_bpf_pullback(d)}};
  };
  auto least_nef = [&](bool two_k_form) -> json {
    for (Int n = 1; n <= n_max; ++n) {
      const PullbackClass d =
          two_k_form ? (n + 1) * ctx.B() - 2 * ctx.K() : n * ctx.B() - ctx.K();
      if (is_nef_pullback(d)) return str(n);
    }
    return nullptr;
  };
  return json{{"base", ctx.cover().base().name()},
              {"degree", str(ctx.cover().degree())},
              {"branch_class", ctx.cover().branch_class().str()},
              {"B", ctx.B().str()},
              {"K", ctx.K().str()},
              {"B2", str(ctx.B2())},
              {"BK", str(ctx.BK())},
              {"K2", str(ctx.K2())},
              {"p_g", str(ctx.p_g())},
              {"q", str(ctx.q())},
              {"positivity",
               {{"B", positivity(ctx.B())},
                {"K", positivity(ctx.K())},
                {"K+B", positivity(kb)}}},
              {"least_n_nef_np1B_minus_2K", least_nef(true)},
              {"least_n_nef_nB_minus_K", least_nef(false)}};
}

std::string Report::serialize_machine() const { return machine.dump(2) + "\n"; }

json parse_machine(const std::string& text) { return json::parse(text); }

std::string render_table(
    const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  std::string out;
  for (const auto& [key, value] : rows) {
    out += "  " + key + std::string(width - key.size(), ' ') + "  " + value +
           "\n";
  }
  return out;
}

}  // namespace npcert
