#pragma once

#include "npcert/np_engine.hpp"

#include <nlohmann/json.hpp>

namespace npcert {

/// Schema violation in a surface definition file; the message names the
/// offending field.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A surface definition document:
///
///   {
///     "base":   {"type": "hirzebruch", "e": 1}   |  {"type": "plane"},
///     "cover":  {"degree": 2, "branch_class": [3, 8]},
///     "bundle": [1, 4],
///     "n_max":  64,      // optional engine override
///     "r_cap":  259      // optional engine override
///   }
///
/// Class coordinates are [c0, f] on a Hirzebruch base and [d] on the plane.
/// Integers may be JSON integers or decimal strings (arbitrary precision).
/// Unknown keys are rejected.
struct SurfaceSpec {
  BaseSurface base = BaseSurface::plane();
  Int degree{2};
  DivisorClass branch_class = DivisorClass(BaseSurface::plane(), 1);
  DivisorClass bundle = DivisorClass(BaseSurface::plane(), 1);
  std::optional<Int> n_max;
  std::optional<Int> r_cap;

  static SurfaceSpec parse(const nlohmann::json& doc);
  static SurfaceSpec load(const std::string& path);
  nlohmann::json to_json() const;

  CyclicCover cover() const;
  SurfaceContext context() const;
  EngineOptions options() const;
};

/// An integer from a JSON value: an integral number or a decimal string.
Int int_from_json(const nlohmann::json& v, const std::string& field);

}  // namespace npcert
