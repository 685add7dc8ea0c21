#include "lagsurf/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "lagsurf/certificate.hpp"
#include "lagsurf/certificate_io.hpp"
#include "lagsurf/congruence.hpp"
#include "lagsurf/intmatrix.hpp"
#include "lagsurf/wavefront.hpp"

namespace lagsurf {

ReportRow classify_row(const Mod2Class& a) {
  ReportRow row;
  row.cls = to_string(a);
  const auto p = pontrjagin_square(a);
  row.p_residue = p.residue();
  row.p_normalized = p.normalized();
  if (a.is_zero()) {
    row.max_euler = -4;
  } else {
    row.minimal_genus = minimal_genus(a);
    row.max_euler = max_euler(a);
  }
  try {
    const auto cert = generate(a, row.max_euler);
    row.certified = verify(cert).accepted;
    row.certificate = row.certified ? summary(cert.steps) : "none:verify_rejected";
  } catch (const GenerationError& e) {
    switch (e.failure()) {
      case GenerationFailure::no_construction: row.certificate = "none:no_construction"; break;
      case GenerationFailure::not_realizable: row.certificate = std::string("none:") + to_string(e.reason()); break;
      case GenerationFailure::invalid_query: row.certificate = "none:invalid_query"; break;
    }
  }
  return row;
}

std::vector<ReportRow> classify_all_serial(const RationalManifold& x, bool include_zero) {
  const auto classes = enumerate_mod2_classes(x, include_zero);
  std::vector<ReportRow> rows;
  rows.reserve(classes.size());
  for (const auto& a : classes) rows.push_back(classify_row(a));
  return rows;
}

std::vector<ReportRow> classify_all(const RationalManifold& x, bool include_zero) {
  const auto classes = enumerate_mod2_classes(x, include_zero);
  std::vector<ReportRow> rows(classes.size());
  const auto n = static_cast<std::int64_t>(classes.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = classify_row(classes[static_cast<std::size_t>(i)]);
  return rows;
}

std::string format_row(const ReportRow& row) {
  std::ostringstream out;
  out << row.cls << '\t' << row.p_residue << '\t' << row.p_normalized << '\t';
  if (row.minimal_genus) {
    out << *row.minimal_genus;
  } else {
    out << '-';
  }
  out << '\t' << row.max_euler << '\t' << row.certificate;
  return out.str();
}

// --- attainment sweep -------------------------------------------------------

namespace {

std::vector<SweepFailure> check_class(int k, const Mod2Class& a, int depth) {
  std::vector<SweepFailure> out;
  const auto name = to_string(a);
  const int rep = pontrjagin_square(a).normalized();
  for (int j = 0; j < depth; ++j) {
    const std::int64_t chi = rep - 4 * j;
    auto fail = [&](std::string what) { out.push_back({k, name, chi, std::move(what)}); };
    const auto answer = realizable_nonorientable(a, chi);
    if (!answer.realizable()) {
      fail(std::string("oracle rejects: ") + to_string(answer.reason));
      continue;
    }
    if (answer.max_euler != rep || answer.minimal_genus != 2 - rep || *answer.minimal_genus < 1 ||
        *answer.minimal_genus > 4) {
      fail("oracle genus/euler disagree with P");
      continue;
    }
    try {
      const auto cert = generate(a, chi);
      const auto v = verify(cert);
      if (!v.accepted) {
        fail("verifier rejects at step " + std::to_string(v.step_index) + ": " + v.rule);
      } else if (cert.claim.surface.orientable || cert.claim.surface.crosscaps != 2 - chi) {
        fail("claim is not N_" + std::to_string(2 - chi));
      }
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  return out;
}

SweepResult sweep(int k_max, int depth, bool parallel) {
  if (k_max < 0 || depth < 1) throw std::invalid_argument("attainment sweep needs k_max >= 0 and depth >= 1");
  SweepResult result;
  for (int k = 0; k <= k_max; ++k) {
    const auto classes = enumerate_mod2_classes(RationalManifold::cp2_blowup(k), false);
    std::vector<std::vector<SweepFailure>> per_class(classes.size());
    const auto n = static_cast<std::int64_t>(classes.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < n; ++i) {
        per_class[static_cast<std::size_t>(i)] = check_class(k, classes[static_cast<std::size_t>(i)], depth);
      }
    } else {
      for (std::int64_t i = 0; i < n; ++i) {
        per_class[static_cast<std::size_t>(i)] = check_class(k, classes[static_cast<std::size_t>(i)], depth);
      }
    }
    result.checked += classes.size() * static_cast<std::size_t>(depth);
    for (auto& f : per_class) result.failures.insert(result.failures.end(), f.begin(), f.end());
  }
  return result;
}

}  // namespace

SweepResult attainment_sweep(int k_max, int depth) { return sweep(k_max, depth, true); }
SweepResult attainment_sweep_serial(int k_max, int depth) { return sweep(k_max, depth, false); }

// --- selftest ---------------------------------------------------------------

namespace {

using Rng = std::mt19937_64;

Mod2Class random_class(Rng& rng, const RationalManifold& x) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(x.b2()));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return Mod2Class(x, std::move(bits));
}

IntegralClass random_integral(Rng& rng, const RationalManifold& x, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<std::int64_t> c(static_cast<std::size_t>(x.b2()));
  for (auto& v : c) v = d(rng);
  return IntegralClass(x, std::move(c));
}

RationalManifold random_manifold(Rng& rng, int k_max) {
  std::uniform_int_distribution<int> d(-1, k_max);
  const int k = d(rng);
  return k < 0 ? RationalManifold::s2xs2() : RationalManifold::cp2_blowup(k);
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string wu_consistency(int k_max) {
  for (int k = 0; k <= k_max; ++k) {
    const auto x = RationalManifold::cp2_blowup(k);
    const auto kx = canonical_class(x);
    for (const auto& a : enumerate_mod2_classes(x, true)) {
      const auto z = lift(a);
      if (((square(z) - pairing(kx, z)) % 2 + 2) % 2 != 0) return "fails for " + to_string(a);
    }
  }
  return {};
}

std::string bilinearity() {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_manifold(rng, 10);
    const auto a = random_integral(rng, x, 50), b = random_integral(rng, x, 50), c = random_integral(rng, x, 50);
    if (pairing(a, b) != pairing(b, a)) return "asymmetric";
    if (pairing(a + b, c) != pairing(a, c) + pairing(b, c)) return "not additive";
    if (pairing(a * 7, c) != 7 * pairing(a, c)) return "not homogeneous";
    if (mod2_reduce(a + b) != mod2_reduce(a) + mod2_reduce(b)) return "reduction not additive";
  }
  return {};
}

std::string lift_invariance() {
  Rng rng(2);
  for (int i = 0; i < 10000; ++i) {
    const auto x = random_manifold(rng, 10);
    const auto a = random_class(rng, x);
    const auto shifted = lift(a) + random_integral(rng, x, 1000) * 2;
    if (PontrjaginValue(square(shifted)) != pontrjagin_square(a)) return "fails for " + to_string(a);
  }
  return {};
}

std::string quadratic_refinement(int k_max) {
  for (int k = 0; k <= k_max; ++k) {
    const auto classes = enumerate_mod2_classes(RationalManifold::cp2_blowup(k), true);
    for (const auto& a : classes) {
      for (const auto& b : classes) {
        const auto cross = ((pairing(lift(a), lift(b)) % 2) + 2) % 2;
        const auto expected = pontrjagin_square(a).residue() + pontrjagin_square(b).residue() + 2 * cross;
        if (!pontrjagin_square(a + b).congruent(expected)) return "fails for " + to_string(a) + ", " + to_string(b);
      }
    }
  }
  return {};
}

std::string audin_parity(int k_max) {
  for (int k = 0; k <= k_max; ++k) {
    for (const auto& a : enumerate_mod2_classes(RationalManifold::cp2_blowup(k), true)) {
      for (int chi = -10; chi <= 1; ++chi) {
        if (audin_check(a, chi) && !immersion_parity_check(a, chi)) {
          return "fails for " + to_string(a) + " chi=" + std::to_string(chi);
        }
      }
    }
  }
  return {};
}

std::string formula_reproduction() {
  for (int m = 0; m <= 100; ++m) {
    const auto x = RationalManifold::cp2_blowup(m);
    auto e = Mod2Class::zero(x);
    for (int i = 1; i <= m; ++i) e = e + Mod2Class::basis(x, i);
    const auto h = e + Mod2Class::basis(x, 0);
    if (!pontrjagin_square(e).congruent(-m)) return "P(E1+..+Em) wrong at m=" + std::to_string(m);
    if (!pontrjagin_square(h).congruent(1 - m)) return "P(H+E1+..+Em) wrong at m=" + std::to_string(m);
  }
  return {};
}

std::string zt_family() {
  for (int t = 0; t <= 100; ++t) {
    const auto z = zt_class(t, zt_min_blowups(t));
    if (pairing(z, canonical_class(z.ambient())) != 0 || square(z) != -2) return "fails at t=" + std::to_string(t);
  }
  return {};
}

std::string attainment(int k_max) {
  const auto r = attainment_sweep(k_max, 3);
  if (r.ok()) return {};
  std::string out = std::to_string(r.failures.size()) + " failures, first: k=" + std::to_string(r.failures[0].k) +
                    " " + r.failures[0].cls + " chi=" + std::to_string(r.failures[0].chi);
  return out;
}

std::string product_cases() {
  const auto x = RationalManifold::s2xs2();
  auto certified = [&](const char* cls, std::int64_t chi) {
    const auto c = generate(parse_mod2_class(x, cls), chi);
    return verify(c).accepted && c.claim.chi == chi;
  };
  if (!certified("B+F", 2)) return "B+F sphere";
  if (!certified("F", 0)) return "F Klein bottle";
  if (!certified("B", 0)) return "B Klein bottle";
  if (!certified("0", -4)) return "zero class chi=-4";
  if (realizable_nonorientable(Mod2Class::zero(x), 0).realizable()) return "zero class chi=0 accepted";
  return {};
}

std::string certificate_round_trip(int k_max) {
  for (int k = 0; k <= k_max; ++k) {
    for (const auto& a : enumerate_mod2_classes(RationalManifold::cp2_blowup(k), false)) {
      std::optional<ConstructionCertificate> c;
      try {
        c = generate(a, max_euler(a));
      } catch (const GenerationError&) {
        continue;  // reported by the attainment check
      }
      const auto text = to_json(*c);
      const auto back = certificate_from_json(text);
      if (to_json(back) != text || !verify(back).accepted) return "round trip fails for " + to_string(a);
    }
  }
  return {};
}

std::string whitney() {
  const auto found = find_tangencies(whitney_plus(), whitney_minus(), Box::square(-0.5, 0.5), {});
  if (found.size() != 1) return std::to_string(found.size()) + " tangencies";
  const auto& p = found[0];
  if (std::hypot(p.x1, p.x2) > 1e-8 || p.sgn != 1) return "wrong point or sign";
  if (handle_sign({1, -1}, p.sgn) != 1) return "handle sign";
  return {};
}

std::string block_determinants() {
  Rng rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i < 250; ++i) {
      IntMatrix a(n), b(n);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          a(r, c) = d(rng);
          b(r, c) = d(rng);
        }
      }
      if (!block_det_identity(a, b).holds()) return "fails at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string sign_algebra() {
  for (int n = 1; n <= 4; ++n) {
    for (int s1 : {-1, 1}) {
      for (int s2 : {-1, 1}) {
        for (int sgn : {-1, 1}) {
          const OrientedSectionPair pair{s1, s2};
          if (handle_sign(pair, sgn) != handle_sign_from_index(intersection_index(pair, sgn, n), n)) {
            return "fails at n=" + std::to_string(n);
          }
        }
      }
    }
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_selftest(int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  std::vector<CheckResult> out;
  out.push_back(check("wu_consistency", [&] { return wu_consistency(std::min(k_max, 8)); }));
  out.push_back(check("bilinearity", bilinearity));
  out.push_back(check("lift_invariance", lift_invariance));
  out.push_back(check("quadratic_refinement", [&] { return quadratic_refinement(std::min(k_max, 6)); }));
  out.push_back(check("audin_implies_parity", [&] { return audin_parity(k_max); }));
  out.push_back(check("formula_reproduction", formula_reproduction));
  out.push_back(check("zt_family", zt_family));
  out.push_back(check("attainment", [&] { return attainment(k_max); }));
  out.push_back(check("product_cases", product_cases));
  out.push_back(check("certificate_round_trip", [&] { return certificate_round_trip(std::min(k_max, 6)); }));
  out.push_back(check("whitney_fixture", whitney));
  out.push_back(check("block_determinants", block_determinants));
  out.push_back(check("sign_algebra", sign_algebra));
  return out;
}

}  // namespace lagsurf
