#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lagsurf/cli.hpp"

using lagsurf::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lagsurf_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("classify") {
  const auto r = cli({"classify", "--manifold", "cp2+3", "--class", "E1+E2+E3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "class\tP_residue\tP\tminimal_genus\tmax_euler\tcertificate\n"
        "E1+E2+E3\t1\t1\t1\t1\tLagrangianSphere(0);BlowUp\n");

  const auto bf = cli({"classify", "--manifold", "s2xs2", "--class", "B+F"});
  CHECK(bf.code == 0);
  CHECK(bf.out.find("B+F\t2\t-2\t4\t-2\t") != std::string::npos);
  CHECK(bf.out.find("advisory\tlagrangian sphere (chi=2): antidiagonal") != std::string::npos);

  const auto zero = cli({"classify", "--manifold", "cp2+1", "--class", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("advisory\tzero class: realizable exactly for chi in {-4,-8,...}") != std::string::npos);

  const auto t0 = cli({"classify", "--manifold", "cp2+2", "--class", "E1+E2"});
  CHECK(t0.out.find("t=0 (degenerate case") != std::string::npos);

  CHECK(cli({"classify", "--manifold", "cp2+1", "--class", "0", "--chi", "0"}).out.find(
            "verdict\tnot_realizable\tzero_class_klein_bottle") != std::string::npos);
  CHECK(cli({"classify", "--manifold", "cp2", "--class", "H", "--chi", "-3"}).out.find("verdict\trealizable\tok") !=
        std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({"classify", "--manifold", "cp2+1", "--class", "E7"}).code == 2);
  CHECK(cli({"classify", "--manifold", "torus", "--class", "H"}).code == 2);
  CHECK(cli({"classify", "--manifold", "cp2", "--class", "H", "--chi", "5"}).code == 2);
  CHECK(cli({"enumerate", "--k", "17"}).code == 2);
  CHECK(cli({"enumerate", "--k", "17", "--cap", "10"}).code == 2);
  CHECK(cli({"selftest", "--kmax", "20"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"wavefront", "--h1", "nope"}).code == 2);
  CHECK(cli({"wavefront", "--box", "1,0"}).code == 2);
  CHECK(cli({"certificate", "--manifold", "cp2", "--class", "H", "--chi", "3"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("certificate and verify round trip") {
  const auto path = temp_path("z1.json");
  const auto r = cli({"certificate", "--manifold", "cp2+4", "--class", "H+E1+E2+E3+E4", "--chi", "1", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "manifold\tcp2+4\nstep\t0\tLagrangianSphere\tt=1\nstep\t1\tBlowUp\t-\nclaim\tH+E1+E2+E3+E4\tRP2\t1\n");
  const auto doc = slurp(path);
  CHECK(doc.find("\"op\": \"LagrangianSphere\"") != std::string::npos);

  const auto json = cli({"certificate", "--manifold", "cp2+4", "--class", "H+E1+E2+E3+E4", "--chi", "1", "--json"});
  CHECK(json.out == doc);

  const auto v = cli({"verify", path});
  CHECK(v.code == 0);
  CHECK(v.out == "accepted\tH+E1+E2+E3+E4\tRP2\t1\n");

  // Drop the last step: replay stops short of the claim.
  const auto cut = temp_path("z1_cut.json");
  {
    const auto blow = doc.find(",\n    {\n      \"op\": \"BlowUp\"");
    REQUIRE(blow != std::string::npos);
    const auto close = doc.find("}\n    }", blow);
    std::ofstream(cut) << doc.substr(0, blow) << doc.substr(close + 7);
  }
  const auto bad = cli({"verify", cut});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("rejected\tstep=1\trule=state_mismatch") == 0);

  // Byte truncation is a document error.
  const auto half = temp_path("z1_half.json");
  std::ofstream(half) << doc.substr(0, doc.size() / 2);
  const auto broken = cli({"verify", half});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("rejected\tstep=-1\trule=document") == 0);

  CHECK(cli({"verify", temp_path("missing.json")}).code == 2);

  std::filesystem::remove(path);
  std::filesystem::remove(cut);
  std::filesystem::remove(half);
}

TEST_CASE("certificate rejections exit 1") {
  const auto r = cli({"certificate", "--manifold", "cp2", "--class", "H", "--chi", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("congruence_fails") != std::string::npos);
  CHECK(cli({"certificate", "--manifold", "cp2+8", "--class", "H+E1+E2+E3+E4+E5+E6+E7+E8", "--chi", "1"}).code == 1);
}

TEST_CASE("enumerate") {
  const auto r = cli({"enumerate", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 8);
  const auto same = cli({"enumerate", "--manifold", "cp2+2", "--serial"});
  CHECK(same.out == r.out);
  CHECK(count_lines(cli({"enumerate", "--k", "2", "--include-zero"}).out) == 9);
  const auto json = cli({"enumerate", "--manifold", "s2xs2", "--json"});
  CHECK(json.out.find("\"class\": \"B+F\"") != std::string::npos);
  CHECK(cli({"enumerate", "--k", "2", "--manifold", "cp2+2"}).code == 2);
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::string> args{"enumerate", "--k", "9"};
  const auto a = cli(args), b = cli(args);
  CHECK(a.out == b.out);
  CHECK(cli({"enumerate", "--k", "9", "--serial"}).out == a.out);
  const std::vector<std::string> wf{"wavefront", "--h1", "deformed-", "--h2", "const:x1", "--box", "-0.9,0.3,-0.3,0.3"};
  CHECK(cli(wf).out == cli(wf).out);
}

TEST_CASE("wavefront") {
  const auto r = cli({"wavefront", "--h1", "whitney+", "--h2", "whitney-", "--box", "-0.5,0.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1\tx2\tdet\tsgn\ttransversal\n0.000000000\t0.000000000\t4.000000000e+00\t1\t1\n");

  const auto d = cli({"wavefront", "--h1", "deformed-", "--h2", "const:x1", "--box", "-0.9,0.3,-0.3,0.3", "--orient",
                      "1,1", "--serial"});
  CHECK(d.code == 0);
  std::istringstream lines(d.out);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header == "x1\tx2\tdet\tsgn\ttransversal\tindex\thandle");
  CHECK(first.find("\t-1\t1\t1\t1") != std::string::npos);
  CHECK(second.find("\t1\t1\t-1\t-1") != std::string::npos);
}

TEST_CASE("selftest") {
  const auto ok = cli({"selftest", "--kmax", "6"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const auto at8 = cli({"selftest", "--kmax", "8"});
  CHECK(at8.code == 1);
  CHECK(at8.out.find("FAIL\tattainment") != std::string::npos);
}
