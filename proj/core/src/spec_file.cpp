#include "npcert/spec_file.hpp"

#include <fstream>

namespace npcert {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
  if (!obj.is_object())
    throw SpecError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) throw SpecError(where + ": unknown key \"" + key + "\"");
  }
}

const json& require_key(const json& obj, const std::string& where,
                        const char* key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw SpecError(where + ": missing key \"" + std::string(key) + "\"");
  return *it;
}

DivisorClass class_from_json(const json& v, const BaseSurface& base,
                             const std::string& field) {
  if (!v.is_array())
    throw SpecError(field + ": expected an array of coordinates");
  if (base.is_plane()) {
    if (v.size() != 1)
      throw SpecError(field + ": plane classes have one coordinate [d]");
    return DivisorClass(base, int_from_json(v[0], field + "[0]"));
  }
  if (v.size() != 2)
    throw SpecError(field + ": Hirzebruch classes have coordinates [c0, f]");
  return DivisorClass(base, int_from_json(v[0], field + "[0]"),
                      int_from_json(v[1], field + "[1]"));
}

}  // namespace

Int int_from_json(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      return Int(s);
    } catch (const std::exception&) {
      throw SpecError(field + ": \"" + s + "\" is not a decimal integer");
    }
  }
  throw SpecError(field + ": expected an integer or a decimal string");
}

SurfaceSpec SurfaceSpec::parse(const json& doc) {
  reject_unknown_keys(doc, "spec",
                      {"base", "cover", "bundle", "n_max", "r_cap"});

  const json& base_obj = require_key(doc, "spec", "base");
  reject_unknown_keys(base_obj, "base", {"type", "e"});
  const json& type = require_key(base_obj, "base", "type");
  if (!type.is_string())
    throw SpecError("base.type: expected \"hirzebruch\" or \"plane\"");

  SurfaceSpec spec;
  if (type.get<std::string>() == "plane") {
    if (base_obj.contains("e"))
      throw SpecError("base.e: not meaningful for the plane");
    spec.base = BaseSurface::plane();
  } else if (type.get<std::string>() == "hirzebruch") {
    spec.base = BaseSurface::hirzebruch(
        int_from_json(require_key(base_obj, "base", "e"), "base.e"));
  } else {
    throw SpecError("base.type: expected \"hirzebruch\" or \"plane\", got \"" +
                    type.get<std::string>() + "\"");
  }

  const json& cover_obj = require_key(doc, "spec", "cover");
  reject_unknown_keys(cover_obj, "cover", {"degree", "branch_class"});
  spec.degree = int_from_json(require_key(cover_obj, "cover", "degree"),
                              "cover.degree");
  spec.branch_class = class_from_json(
      require_key(cover_obj, "cover", "branch_class"), spec.base,
      "cover.branch_class");

  spec.bundle = class_from_json(require_key(doc, "spec", "bundle"), spec.base,
                                "bundle");

  if (doc.contains("n_max"))
    spec.n_max = int_from_json(doc["n_max"], "n_max");
  if (doc.contains("r_cap"))
    spec.r_cap = int_from_json(doc["r_cap"], "r_cap");
  return spec;
}

SurfaceSpec SurfaceSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(path + ": " + e.what());
  }
  return parse(doc);
}

json SurfaceSpec::to_json() const {
  json doc;
  if (base.is_plane()) {
    doc["base"] = {{"type", "plane"}};
  } else {
    doc["base"] = {{"type", "hirzebruch"}, {"e", str(base.e())}};
  }
  json branch = json::array();
  json b = json::array();
  if (base.is_plane()) {
    branch.push_back(str(branch_class.d()));
    b.push_back(str(bundle.d()));
  } else {
    branch.push_back(str(branch_class.c0()));
    branch.push_back(str(branch_class.f()));
    b.push_back(str(bundle.c0()));
    b.push_back(str(bundle.f()));
  }
  doc["cover"] = {{"degree", str(degree)}, {"branch_class", branch}};
  doc["bundle"] = b;
  if (n_max) doc["n_max"] = str(*n_max);
  if (r_cap) doc["r_cap"] = str(*r_cap);
  return doc;
}

CyclicCover SurfaceSpec::cover() const {
  return CyclicCover::create(base, degree, branch_class);
}

SurfaceContext SurfaceSpec::context() const {
  return SurfaceContext::create(cover(), bundle);
}

EngineOptions SurfaceSpec::options() const {
  EngineOptions opts;
  if (n_max) opts.n_max = *n_max;
  if (r_cap) opts.r_cap = *r_cap;
  return opts;
}

}  // namespace npcert
