#include "lagsurf/certificate_io.hpp"

#include <nlohmann/json.hpp>
#include <limits>

namespace lagsurf {

namespace {

using json = nlohmann::ordered_json;

std::int64_t integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw DocumentError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

json manifold_json(const RationalManifold& x) {
  json out;
  out["kind"] = x.is_blowup() ? "CP2BlowUp" : "S2xS2";
  out["k"] = x.blowups();
  return out;
}

RationalManifold manifold_from(const json& j) {
  if (!j.is_object()) throw DocumentError("manifold must be an object");
  const auto kind = j.at("kind").get<std::string>();
  const auto k = integer(j.at("k"), "k");
  if (kind == "S2xS2") {
    if (k != 0) throw DocumentError("S2xS2 takes k = 0");
    return RationalManifold::s2xs2();
  }
  if (kind == "CP2BlowUp") {
    if (k < 0 || k > kMaxBlowups) throw DocumentError("manifold k out of range");
    return RationalManifold::cp2_blowup(static_cast<int>(k));
  }
  throw DocumentError("unknown manifold kind '" + kind + "'");
}

json step_json(const CertificateStep& s) {
  json params = json::object();
  if (const auto* p = std::get_if<step::LagrangianSphere>(&s)) params["t"] = p->t;
  if (const auto* p = std::get_if<step::GiventalSurface>(&s)) {
    params["l"] = p->l;
    params["manifold"] = manifold_json(p->ambient);
  }
  if (const auto* p = std::get_if<step::AddFourCrosscaps>(&s)) params["l"] = p->l;
  if (const auto* p = std::get_if<step::Relabel>(&s)) params["perm"] = p->perm;

  json out;
  out["op"] = op_name(s);
  out["params"] = std::move(params);
  return out;
}

int int_param(const json& params, const char* key) {
  const auto v = integer(params.at(key), key);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw DocumentError(std::string("parameter '") + key + "' out of range");
  }
  return static_cast<int>(v);
}

CertificateStep step_from(const json& j) {
  if (!j.is_object()) throw DocumentError("step must be an object");
  const auto op = j.at("op").get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) throw DocumentError("params must be an object");

  if (op == "RealRP2") return step::RealRP2{};
  if (op == "CliffordTorus") return step::CliffordTorus{};
  if (op == "RealKleinBottle") return step::RealKleinBottle{};
  if (op == "LagrangianSphere") return step::LagrangianSphere{int_param(params, "t")};
  if (op == "AntidiagonalSphere") return step::AntidiagonalSphere{};
  if (op == "GiventalSurface") return step::GiventalSurface{int_param(params, "l"), manifold_from(params.at("manifold"))};
  if (op == "BlowUp") return step::BlowUp{};
  if (op == "PadBlowUp") return step::PadBlowUp{};
  if (op == "AddFourCrosscaps") return step::AddFourCrosscaps{int_param(params, "l")};
  if (op == "Relabel") {
    const auto& perm = params.at("perm");
    if (!perm.is_array()) throw DocumentError("Relabel perm must be an array");
    step::Relabel r;
    for (const auto& v : perm) {
      const auto n = integer(v, "Relabel perm entry");
      if (n < std::numeric_limits<int>::min() || n > std::numeric_limits<int>::max()) {
        throw DocumentError("Relabel perm entry out of range");
      }
      r.perm.push_back(static_cast<int>(n));
    }
    return r;
  }
  if (op == "FiberSumToS2xS2") return step::FiberSumToS2xS2{};
  if (op == "SwapFactors") return step::SwapFactors{};
  throw DocumentError("unknown step op '" + op + "'");
}

}  // namespace

std::string to_json(const ConstructionCertificate& c) {
  json doc;
  doc["version"] = kCertificateVersion;
  doc["manifold"] = manifold_json(c.manifold);
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(step_json(s));
  doc["steps"] = std::move(steps);
  json claim;
  claim["class"] = to_string(c.claim.cls);
  claim["chi"] = c.claim.chi;
  claim["crosscaps"] = c.claim.surface.orientable ? 0 : c.claim.surface.crosscaps;
  doc["claim"] = std::move(claim);
  return doc.dump(2) + "\n";
}

ConstructionCertificate certificate_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("not a JSON document: ") + e.what());
  }

  try {
    if (!doc.is_object()) throw DocumentError("certificate must be a JSON object");
    if (integer(doc.at("version"), "version") != kCertificateVersion) {
      throw DocumentError("unsupported certificate version");
    }
    const auto x = manifold_from(doc.at("manifold"));

    const auto& steps_json = doc.at("steps");
    if (!steps_json.is_array()) throw DocumentError("steps must be an array");
    std::vector<CertificateStep> steps;
    for (const auto& s : steps_json) steps.push_back(step_from(s));

    const auto& claim_json = doc.at("claim");
    const auto cls = parse_mod2_class(x, claim_json.at("class").get<std::string>());
    const auto chi = integer(claim_json.at("chi"), "chi");
    const auto crosscaps = integer(claim_json.at("crosscaps"), "crosscaps");
    SurfaceType surface;
    if (crosscaps == 0) {
      if (chi > 2 || chi % 2 != 0) throw DocumentError("orientable claim needs even chi <= 2");
      surface = SurfaceType::from_euler(chi, true);
    } else if (crosscaps > 0 && crosscaps <= std::numeric_limits<int>::max()) {
      surface = SurfaceType::nonorientable(static_cast<int>(crosscaps));
    } else {
      throw DocumentError("crosscaps must be nonnegative");
    }
    return ConstructionCertificate{x, std::move(steps), LagrangianState{x, cls, surface, chi}};
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    throw DocumentError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace lagsurf
