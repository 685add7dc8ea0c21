#include "lagsurf/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <nlohmann/json.hpp>

#include "lagsurf/certificate.hpp"
#include "lagsurf/certificate_io.hpp"
#include "lagsurf/congruence.hpp"
#include "lagsurf/sweep.hpp"
#include "lagsurf/wavefront.hpp"

namespace lagsurf {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RationalManifold manifold_within_cap(const std::string& text, int cap) {
  RationalManifold x = RationalManifold::s2xs2();
  try {
    x = parse_manifold(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (x.is_blowup() && x.blowups() > cap) {
    throw UsageError("k = " + std::to_string(x.blowups()) + " exceeds the cap " + std::to_string(cap) +
                     " (raise it with --cap)");
  }
  return x;
}

Mod2Class class_in(const RationalManifold& x, const std::string& text) {
  try {
    return parse_mod2_class(x, text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::string fixed(double v, int digits) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s(buf);
  // "-0.000000000" after rounding prints as zero too.
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

std::string scientific(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

std::string params_text(const nlohmann::ordered_json& params) {
  if (params.empty()) return "-";
  std::string out;
  for (const auto& [key, value] : params.items()) {
    if (!out.empty()) out += ';';
    out += key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

void print_certificate_tsv(const ConstructionCertificate& c, std::ostream& out) {
  const auto doc = nlohmann::ordered_json::parse(to_json(c));
  out << "manifold\t" << c.manifold.name() << '\n';
  int index = 0;
  for (const auto& s : doc["steps"]) {
    out << "step\t" << index++ << '\t' << s["op"].get<std::string>() << '\t' << params_text(s["params"]) << '\n';
  }
  out << "claim\t" << to_string(c.claim.cls) << '\t' << c.claim.surface.name() << '\t' << c.claim.chi << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --- subcommands ------------------------------------------------------------

int cmd_classify(const std::string& manifold, const std::string& cls, const std::optional<std::int64_t>& chi, int cap,
                 std::ostream& out) {
  const auto x = manifold_within_cap(manifold, cap);
  const auto a = class_in(x, cls);
  out << kReportHeader << '\n' << format_row(classify_row(a)) << '\n';
  if (a.is_zero()) {
    out << "advisory\tzero class: realizable exactly for chi in {-4,-8,...}\n";
  } else if (const auto t = sphere_advisory(a)) {
    if (*t < 0) {
      out << "advisory\tlagrangian sphere (chi=2): antidiagonal\n";
    } else {
      out << "advisory\tlagrangian sphere (chi=2): Z_t, t=" << *t << (*t == 0 ? " (degenerate case Z_0 = -E1+E2)" : "") << '\n';
    }
  }
  if (chi) {
    if (*chi == 2) {
      const bool sphere = !a.is_zero() && sphere_advisory(a).has_value();
      out << "verdict\t" << (sphere ? "realizable" : "not_realizable") << "\tsphere\n";
      return 0;
    }
    RealizabilityAnswer answer{};
    try {
      answer = realizable_nonorientable(a, *chi);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    out << "verdict\t" << (answer.realizable() ? "realizable" : "not_realizable") << '\t' << to_string(answer.reason)
        << '\n';
  }
  return 0;
}

int cmd_certificate(const std::string& manifold, const std::string& cls, std::int64_t chi, const std::string& out_path,
                    bool json, int cap, std::ostream& out, std::ostream& err) {
  const auto x = manifold_within_cap(manifold, cap);
  const auto a = class_in(x, cls);
  std::optional<ConstructionCertificate> c;
  try {
    c = generate(a, chi);
  } catch (const GenerationError& e) {
    if (e.failure() == GenerationFailure::invalid_query) throw UsageError(e.what());
    err << "error: " << e.what() << '\n';
    return 1;
  }
  const auto text = to_json(*c);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << text;
  }
  if (json) {
    out << text;
  } else {
    print_certificate_tsv(*c, out);
  }
  return 0;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const auto text = read_file(path);
  std::optional<ConstructionCertificate> c;
  try {
    c = certificate_from_json(text);
  } catch (const DocumentError& e) {
    out << "rejected\tstep=-1\trule=document\t" << e.what() << '\n';
    return 1;
  }
  const auto v = verify(*c);
  if (v.accepted) {
    out << "accepted\t" << to_string(c->claim.cls) << '\t' << c->claim.surface.name() << '\t' << c->claim.chi << '\n';
    return 0;
  }
  out << "rejected\tstep=" << v.step_index << "\trule=" << v.rule << '\t' << v.detail << '\n';
  return 1;
}

int cmd_enumerate(const std::string& manifold, int k, bool include_zero, bool json, bool serial, int cap,
                  std::ostream& out) {
  if (!manifold.empty() && k >= 0) throw UsageError("give either --manifold or --k");
  if (manifold.empty() && k < 0) throw UsageError("enumerate needs --manifold or --k");
  const auto x = manifold_within_cap(manifold.empty() ? "cp2+" + std::to_string(k) : manifold, cap);
  const auto rows = serial ? classify_all_serial(x, include_zero) : classify_all(x, include_zero);
  if (json) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["class"] = r.cls;
      j["p_residue"] = r.p_residue;
      j["p"] = r.p_normalized;
      j["minimal_genus"] = r.minimal_genus ? nlohmann::ordered_json(*r.minimal_genus) : nlohmann::ordered_json();
      j["max_euler"] = r.max_euler;
      j["certificate"] = r.certificate;
      doc.push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
  } else {
    out << kReportHeader << '\n';
    for (const auto& r : rows) out << format_row(r) << '\n';
  }
  return 0;
}

int cmd_selftest(int k_max, int cap, std::ostream& out) {
  if (k_max < 0) throw UsageError("--kmax must be nonnegative");
  if (k_max > cap) throw UsageError("--kmax " + std::to_string(k_max) + " exceeds the cap " + std::to_string(cap));
  bool all = true;
  for (const auto& r : run_selftest(k_max)) {
    all = all && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << '\t' << r.name;
    if (!r.passed) out << '\t' << r.detail;
    out << '\n';
  }
  return all ? 0 : 1;
}

int cmd_wavefront(const std::string& h1_text, const std::string& h2_text, const std::string& box_text, int grid,
                  const std::string& orient, bool serial, std::ostream& out) {
  GeneratingFunction h1 = whitney_plus(), h2 = whitney_minus();
  Box box{};
  std::optional<OrientedSectionPair> pair;
  try {
    h1 = resolve_fixture(h1_text);
    h2 = resolve_fixture(h2_text);
    box = parse_box(box_text);
    if (!orient.empty()) {
      const auto comma = orient.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("--orient needs s1,s2");
      pair = OrientedSectionPair{std::stoi(orient.substr(0, comma)), std::stoi(orient.substr(comma + 1))};
      handle_sign(*pair, 1);  // validates the signs
    }
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (grid < 1) throw UsageError("--grid must be positive");
  TangencyOptions options;
  options.grid = grid;
  const auto found = serial ? find_tangencies_serial(h1, h2, box, options) : find_tangencies(h1, h2, box, options);

  out << "x1\tx2\tdet\tsgn\ttransversal";
  if (pair) out << "\tindex\thandle";
  out << '\n';
  for (const auto& t : found) {
    out << fixed(t.x1, 9) << '\t' << fixed(t.x2, 9) << '\t' << scientific(t.hessian_det) << '\t' << t.sgn << '\t'
        << (t.transversal ? 1 : 0);
    if (pair) {
      if (t.transversal) {
        out << '\t' << intersection_index(*pair, t.sgn, 2) << '\t' << handle_sign(*pair, t.sgn);
      } else {
        out << "\t-\t-";
      }
    }
    out << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lagrangian surfaces in rational 4-manifolds: realizability, certificates, wavefronts", "lagsurf"};
  app.require_subcommand(1);
  int cap = kDefaultBlowupCap;
  app.add_option("--cap", cap, "largest admissible number of blow-ups")->capture_default_str();

  std::string manifold, cls, out_path, in_path, h1 = "whitney+", h2 = "whitney-", box = "-0.5,0.5", orient;
  std::optional<std::int64_t> chi;
  std::int64_t cert_chi = 0;
  int k = -1, k_max = 8, grid = 64;
  bool json = false, include_zero = false, serial = false;

  auto* classify = app.add_subcommand("classify", "Pontrjagin square, minimal genus and best certificate of a class");
  classify->add_option("--manifold", manifold, "cp2+k or s2xs2")->required();
  classify->add_option("--class", cls, "mod-2 class such as H+E1+E3, B+F or 0")->required();
  classify->add_option("--chi", chi, "also decide realizability at this Euler number");

  auto* certificate = app.add_subcommand("certificate", "emit a construction certificate");
  certificate->add_option("--manifold", manifold)->required();
  certificate->add_option("--class", cls)->required();
  certificate->add_option("--chi", cert_chi, "Euler number of the surface (2 for a sphere)")->required();
  certificate->add_option("--out", out_path, "write the JSON document here");
  certificate->add_flag("--json", json, "print the JSON document instead of TSV");

  auto* verify_cmd = app.add_subcommand("verify", "replay and check a certificate document");
  verify_cmd->add_option("file", in_path, "certificate JSON")->required();

  auto* enumerate = app.add_subcommand("enumerate", "report every class of a manifold");
  enumerate->add_option("--k", k, "CP2 blown up k times");
  enumerate->add_option("--manifold", manifold);
  enumerate->add_flag("--include-zero", include_zero);
  enumerate->add_flag("--json", json);
  enumerate->add_flag("--serial", serial, "single-threaded reference path");

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_option("--kmax", k_max, "largest k swept")->capture_default_str();

  auto* wavefront = app.add_subcommand("wavefront", "tangencies of two generating functions");
  wavefront->add_option("--h1", h1, "whitney+, whitney-, deformed- or const:<expr>")->capture_default_str();
  wavefront->add_option("--h2", h2)->capture_default_str();
  wavefront->add_option("--box", box, "lo,hi or x1lo,x1hi,x2lo,x2hi")->capture_default_str();
  wavefront->add_option("--grid", grid)->capture_default_str();
  wavefront->add_option("--orient", orient, "s(L1),s(L2) to add index and handle sign columns");
  wavefront->add_flag("--serial", serial, "single-threaded reference path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*classify) return cmd_classify(manifold, cls, chi, cap, out);
    if (*certificate) return cmd_certificate(manifold, cls, cert_chi, out_path, json, cap, out, err);
    if (*verify_cmd) return cmd_verify(in_path, out);
    if (*enumerate) return cmd_enumerate(manifold, k, include_zero, json, serial, cap, out);
    if (*selftest) return cmd_selftest(k_max, cap, out);
    if (*wavefront) return cmd_wavefront(h1, h2, box, grid, orient, serial, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace lagsurf
