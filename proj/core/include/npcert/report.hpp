#pragma once

#include "npcert/families.hpp"

#include <nlohmann/json.hpp>

namespace npcert {

// JSON encodings of the engine's record types. All numbers are emitted as
// decimal strings so arbitrary-precision values survive any JSON parser.

nlohmann::json to_json(const CohomDims& dims);
nlohmann::json to_json(const Hypothesis& h);
nlohmann::json to_json(const RuleAttempt& a);
nlohmann::json to_json(const NpCertificate& cert);
nlohmann::json to_json(const Inapplicable& inap);
nlohmann::json to_json(const CertifyResult& res);
nlohmann::json to_json(const ClaimCheck& c);
nlohmann::json to_json(const FamilySolution& sol);

/// Invariants, positivity verdicts and least nef shifts of a model, as shown
/// by the describe command.
nlohmann::json describe_json(const SurfaceContext& ctx, const Int& n_max);

/// A command's output: a machine section (stable, byte-identical for
/// identical inputs) and a human section. ok mirrors the exit-code contract.
struct Report {
  nlohmann::json machine;
  std::string human;
  bool ok = true;

  std::string serialize_machine() const;
};

/// Inverse of serialize_machine; parse(serialize(x)) == x.
nlohmann::json parse_machine(const std::string& text);

/// Two-column aligned table for human sections.
std::string render_table(
    const std::vector<std::pair<std::string, std::string>>& rows);

}  // namespace npcert
