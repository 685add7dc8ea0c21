#include "lagsurf/certificate.hpp"

#include <algorithm>
#include <numeric>

namespace lagsurf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr int kMaxSphereParameter = 1000;
constexpr int kMaxAddFour = 1'000'000;

LagrangianState make_state(RationalManifold x, Mod2Class cls, SurfaceType surface) {
  const auto chi = surface.euler();
  return LagrangianState{x, std::move(cls), surface, chi};
}

void require_embedded(const LagrangianState& s, const char* op) {
  if (!s.consistent() || s.surface.components != 1 || s.surface.double_points != 0) {
    throw StepError("precondition", std::string(op) + " needs a connected embedded surface, got " + s.describe());
  }
}

void require_blowup(const LagrangianState& s, const char* op) {
  if (!s.ambient.is_blowup()) {
    throw StepError("precondition", std::string(op) + " is only defined on CP2 # k(-CP2), got " + s.ambient.name());
  }
}

void require_room(const LagrangianState& s, const char* op) {
  if (s.ambient.blowups() + 1 > kMaxBlowups) {
    throw StepError("overflow", std::string(op) + " would exceed " + std::to_string(kMaxBlowups) + " blow-ups");
  }
}

Mod2Class extend(const Mod2Class& cls, bool new_bit) {
  auto bits = cls.bits();
  bits.push_back(new_bit ? 1 : 0);
  return Mod2Class(RationalManifold::cp2_blowup(cls.ambient().blowups() + 1), std::move(bits));
}

}  // namespace

// --- LagrangianState --------------------------------------------------------

bool LagrangianState::consistent() const {
  return surface.valid() && surface.euler() == chi && cls.ambient() == ambient;
}

std::string LagrangianState::describe() const {
  return "(" + ambient.name() + ", " + to_string(cls) + ", " + surface.name() + ", chi=" + std::to_string(chi) + ")";
}

// --- step metadata ----------------------------------------------------------

bool is_base_step(const CertificateStep& s) {
  return std::holds_alternative<step::RealRP2>(s) || std::holds_alternative<step::CliffordTorus>(s) ||
         std::holds_alternative<step::RealKleinBottle>(s) || std::holds_alternative<step::LagrangianSphere>(s) ||
         std::holds_alternative<step::AntidiagonalSphere>(s) || std::holds_alternative<step::GiventalSurface>(s);
}

std::string op_name(const CertificateStep& s) {
  return std::visit(overloaded{
                        [](const step::RealRP2&) { return "RealRP2"; },
                        [](const step::CliffordTorus&) { return "CliffordTorus"; },
                        [](const step::RealKleinBottle&) { return "RealKleinBottle"; },
                        [](const step::LagrangianSphere&) { return "LagrangianSphere"; },
                        [](const step::AntidiagonalSphere&) { return "AntidiagonalSphere"; },
                        [](const step::GiventalSurface&) { return "GiventalSurface"; },
                        [](const step::BlowUp&) { return "BlowUp"; },
                        [](const step::PadBlowUp&) { return "PadBlowUp"; },
                        [](const step::AddFourCrosscaps&) { return "AddFourCrosscaps"; },
                        [](const step::Relabel&) { return "Relabel"; },
                        [](const step::FiberSumToS2xS2&) { return "FiberSumToS2xS2"; },
                        [](const step::SwapFactors&) { return "SwapFactors"; },
                    },
                    s);
}

std::string summary(const CertificateStep& s) {
  if (const auto* sphere = std::get_if<step::LagrangianSphere>(&s)) {
    return "LagrangianSphere(" + std::to_string(sphere->t) + ")";
  }
  if (const auto* g = std::get_if<step::GiventalSurface>(&s)) return "GiventalSurface(" + std::to_string(g->l) + ")";
  if (const auto* add = std::get_if<step::AddFourCrosscaps>(&s)) {
    return "AddFourCrosscaps(" + std::to_string(add->l) + ")";
  }
  return op_name(s);
}

std::string summary(const std::vector<CertificateStep>& steps) {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ';';
    out += summary(steps[i]);
  }
  return out;
}

// --- replay -----------------------------------------------------------------

LagrangianState apply_step(const std::optional<LagrangianState>& prior, const CertificateStep& s) {
  const std::string op = op_name(s);
  if (is_base_step(s) && prior) throw StepError("base_step", op + " must be the first step");
  if (!is_base_step(s) && !prior) throw StepError("base_step", op + " needs a prior state");

  return std::visit(
      overloaded{
          [&](const step::RealRP2&) {
            const auto x = RationalManifold::cp2_blowup(0);
            return make_state(x, Mod2Class::basis(x, 0), SurfaceType::nonorientable(1));
          },
          [&](const step::CliffordTorus&) {
            const auto x = RationalManifold::cp2_blowup(0);
            return make_state(x, Mod2Class::zero(x), SurfaceType::torus());
          },
          [&](const step::RealKleinBottle&) {
            const auto x = RationalManifold::cp2_blowup(1);
            return make_state(x, Mod2Class(x, {1, 1}), SurfaceType::nonorientable(2));
          },
          [&](const step::LagrangianSphere& p) {
            if (p.t < 0 || p.t > kMaxSphereParameter) {
              throw StepError("parameter", "LagrangianSphere needs 0 <= t <= " + std::to_string(kMaxSphereParameter));
            }
            const auto z = zt_class(p.t, zt_min_blowups(p.t));
            if (!sphere_class_check(z)) throw StepError("sphere_criterion", "Z_t fails Z.K = 0, Z.Z = -2");
            return make_state(z.ambient(), mod2_reduce(z), SurfaceType::sphere());
          },
          [&](const step::AntidiagonalSphere&) {
            const auto x = RationalManifold::s2xs2();
            return make_state(x, Mod2Class(x, {1, 1}), SurfaceType::sphere());
          },
          [&](const step::GiventalSurface& p) {
            if (p.l < 1 || p.l > kMaxAddFour) throw StepError("parameter", "GiventalSurface needs l >= 1");
            if (p.ambient.is_blowup() && p.ambient.blowups() > kMaxBlowups) {
              throw StepError("overflow", "GiventalSurface ambient exceeds blow-up limit");
            }
            return make_state(p.ambient, Mod2Class::zero(p.ambient), SurfaceType::nonorientable(4 * p.l + 2));
          },
          [&](const step::BlowUp&) {
            const auto& st = *prior;
            require_embedded(st, "BlowUp");
            require_blowup(st, "BlowUp");
            require_room(st, "BlowUp");
            const auto cls = extend(st.cls, true);
            return make_state(cls.ambient(), cls, SurfaceType::from_euler(st.chi - 1, false));
          },
          [&](const step::PadBlowUp&) {
            const auto& st = *prior;
            require_embedded(st, "PadBlowUp");
            require_blowup(st, "PadBlowUp");
            require_room(st, "PadBlowUp");
            const auto cls = extend(st.cls, false);
            return make_state(cls.ambient(), cls, st.surface);
          },
          [&](const step::AddFourCrosscaps& p) {
            const auto& st = *prior;
            require_embedded(st, "AddFourCrosscaps");
            if (p.l < 1 || p.l > kMaxAddFour) throw StepError("parameter", "AddFourCrosscaps needs l >= 1");
            return make_state(st.ambient, st.cls, SurfaceType::from_euler(st.chi - 4 * static_cast<std::int64_t>(p.l), false));
          },
          [&](const step::Relabel& p) {
            const auto& st = *prior;
            require_embedded(st, "Relabel");
            require_blowup(st, "Relabel");
            const int k = st.ambient.blowups();
            if (static_cast<int>(p.perm.size()) != k) {
              throw StepError("parameter", "Relabel permutation has length " + std::to_string(p.perm.size()) +
                                               ", expected " + std::to_string(k));
            }
            std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
            auto bits = st.cls.bits();
            for (int i = 0; i < k; ++i) {
              const int target = p.perm[static_cast<std::size_t>(i)];
              if (target < 1 || target > k || seen[static_cast<std::size_t>(target)]) {
                throw StepError("parameter", "Relabel entry is not a permutation of 1.." + std::to_string(k));
              }
              seen[static_cast<std::size_t>(target)] = true;
              bits[static_cast<std::size_t>(target)] = st.cls.bits()[static_cast<std::size_t>(i) + 1];
            }
            return make_state(st.ambient, Mod2Class(st.ambient, std::move(bits)), st.surface);
          },
          [&](const step::FiberSumToS2xS2&) {
            const auto& st = *prior;
            const auto kb_ambient = RationalManifold::cp2_blowup(1);
            const LagrangianState expected{kb_ambient, Mod2Class(kb_ambient, {1, 1}), SurfaceType::nonorientable(2), 0};
            if (!(st == expected)) {
              throw StepError("precondition", "FiberSumToS2xS2 needs " + expected.describe() + ", got " + st.describe());
            }
            const auto x = RationalManifold::s2xs2();
            return make_state(x, Mod2Class(x, {0, 1}), st.surface);
          },
          [&](const step::SwapFactors&) {
            const auto& st = *prior;
            require_embedded(st, "SwapFactors");
            if (st.ambient.is_blowup()) throw StepError("precondition", "SwapFactors needs S2 x S2, got " + st.ambient.name());
            return make_state(st.ambient, Mod2Class(st.ambient, {st.cls.bits()[1], st.cls.bits()[0]}), st.surface);
          },
      },
      s);
}

LagrangianState replay(const std::vector<CertificateStep>& steps) {
  std::optional<LagrangianState> state;
  for (const auto& s : steps) state = apply_step(state, s);
  if (!state) throw StepError("base_step", "empty step list");
  return *state;
}

// --- generator --------------------------------------------------------------

namespace {

struct Route {
  std::vector<CertificateStep> steps;
  std::int64_t chi;
  int blowups;  // ambient size after the route
};

std::vector<CertificateStep> with_blowups(CertificateStep base, int count) {
  std::vector<CertificateStep> steps{std::move(base)};
  steps.insert(steps.end(), static_cast<std::size_t>(count), step::BlowUp{});
  return steps;
}

// Candidate constructions for a nonzero class of signature (a, m), best first
// within each family. Each route ends in the class aH + (m exceptional bits).
std::vector<Route> blowup_routes(int a, int m) {
  std::vector<Route> routes;
  if (a == 0) {
    // Sphere in E1+...+E_{4l+2}, then j blow-ups on it.
    for (int l = (m - 2) / 4; l >= 0 && 4 * l + 2 <= m; --l) {
      const int j = m - (4 * l + 2);
      routes.push_back({with_blowups(step::LagrangianSphere{2 * l}, j), 2 - j, zt_min_blowups(2 * l) + j});
    }
    routes.push_back({with_blowups(step::CliffordTorus{}, m), -m, m});
  } else {
    // Sphere in H+E1+...+E_{4l+3}, then j blow-ups on it.
    for (int l = (m - 3) / 4; l >= 0 && 4 * l + 3 <= m; --l) {
      const int j = m - (4 * l + 3);
      routes.push_back({with_blowups(step::LagrangianSphere{2 * l + 1}, j), 2 - j, zt_min_blowups(2 * l + 1) + j});
    }
    routes.push_back({with_blowups(step::RealRP2{}, m), 1 - m, m});
  }
  return routes;
}

// Permutation of exceptional indices taking `from` onto `to`; both have the
// same number of set exceptional bits.
std::vector<int> matching_permutation(const Mod2Class& from, const Mod2Class& to) {
  const int k = from.ambient().blowups();
  std::vector<int> from_set, from_clear, to_set, to_clear;
  for (int i = 1; i <= k; ++i) {
    (from[i] ? from_set : from_clear).push_back(i);
    (to[i] ? to_set : to_clear).push_back(i);
  }
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < from_set.size(); ++i) perm[static_cast<std::size_t>(from_set[i] - 1)] = to_set[i];
  for (std::size_t i = 0; i < from_clear.size(); ++i) perm[static_cast<std::size_t>(from_clear[i] - 1)] = to_clear[i];
  return perm;
}

bool is_identity(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

[[noreturn]] void fail(GenerationFailure failure, Reason reason, const std::string& what) {
  throw GenerationError(failure, reason, what);
}

std::string query_text(const Mod2Class& a, std::int64_t chi) {
  return to_string(a) + " in " + a.ambient().name() + " with chi = " + std::to_string(chi);
}

}  // namespace

ConstructionCertificate generate(const Mod2Class& a, std::int64_t chi) {
  const auto& x = a.ambient();
  const bool want_sphere = chi == 2;
  if (chi > 2) fail(GenerationFailure::invalid_query, Reason::ok, "chi = " + std::to_string(chi) + " exceeds 2");

  if (!want_sphere) {
    const auto answer = realizable_nonorientable(a, chi);
    if (!answer.realizable()) {
      fail(GenerationFailure::not_realizable, answer.reason,
           "not realizable (" + std::string(to_string(answer.reason)) + "): " + query_text(a, chi));
    }
  } else if (!audin_check(a, 2) || a.is_zero()) {
    fail(GenerationFailure::not_realizable, a.is_zero() ? Reason::zero_class_not_multiple_of_4 : Reason::congruence_fails,
         "no Lagrangian sphere: " + query_text(a, chi));
  }

  std::vector<CertificateStep> steps;
  std::int64_t base_chi = 0;

  if (a.is_zero()) {
    const int l = static_cast<int>(-chi / 4);
    steps.push_back(step::GiventalSurface{l, x});
    base_chi = chi;
  } else if (!x.is_blowup()) {
    const auto sig = std::get<ProductSignature>(orbit_signature(a));
    if (sig.p == 1 && sig.q == 1) {
      steps.push_back(step::AntidiagonalSphere{});
      base_chi = 2;
    } else if (!want_sphere) {
      steps = {step::RealKleinBottle{}, step::FiberSumToS2xS2{}};
      if (sig.p == 1) steps.push_back(step::SwapFactors{});
      base_chi = 0;
    }
  } else {
    const auto sig = std::get<BlowUpSignature>(orbit_signature(a));
    const Route* best = nullptr;
    const auto routes = blowup_routes(sig.a, sig.m);
    for (const auto& r : routes) {
      if (r.blowups > x.blowups() || r.chi < chi) continue;
      if (want_sphere && r.chi != 2) continue;
      if (!best || r.chi > best->chi) best = &r;
    }
    if (best) {
      steps = best->steps;
      base_chi = best->chi;
      const auto state = replay(steps);
      for (int i = state.ambient.blowups(); i < x.blowups(); ++i) steps.push_back(step::PadBlowUp{});
      const auto padded = replay(steps);
      auto perm = matching_permutation(padded.cls, a);
      if (!is_identity(perm)) steps.push_back(step::Relabel{std::move(perm)});
    }
  }

  if (steps.empty()) {
    fail(GenerationFailure::no_construction, Reason::ok, "no construction fits the ambient: " + query_text(a, chi));
  }
  if (base_chi > chi) steps.push_back(step::AddFourCrosscaps{static_cast<int>((base_chi - chi) / 4)});

  auto claim = replay(steps);
  if (!(claim.ambient == x) || !(claim.cls == a) || claim.chi != chi) {
    throw std::logic_error("generator produced " + claim.describe() + " for " + query_text(a, chi));
  }
  return ConstructionCertificate{x, std::move(steps), std::move(claim)};
}

// --- verifier ---------------------------------------------------------------

VerifyResult verify(const ConstructionCertificate& c) {
  auto reject = [](int index, std::string rule, std::string detail) {
    return VerifyResult{false, index, std::move(rule), std::move(detail)};
  };

  if (c.steps.empty()) return reject(0, "base_step", "certificate has no steps");

  std::optional<LagrangianState> state;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    try {
      state = apply_step(state, c.steps[i]);
    } catch (const StepError& e) {
      return reject(static_cast<int>(i), e.rule(), e.what());
    } catch (const std::exception& e) {
      return reject(static_cast<int>(i), "malformed", e.what());
    }
  }

  const int end = static_cast<int>(c.steps.size());
  if (!(state->ambient == c.manifold)) {
    return reject(end, "state_mismatch", "replay ends in " + state->ambient.name() + ", certificate declares " + c.manifold.name());
  }
  if (!(*state == c.claim)) {
    return reject(end, "state_mismatch", "replay ends at " + state->describe() + ", claim is " + c.claim.describe());
  }
  if (!c.claim.cls.is_zero() && !audin_check(c.claim.cls, c.claim.chi)) {
    return reject(end, "audin", "P(A) is not congruent to chi mod 4 for " + c.claim.describe());
  }
  return VerifyResult{true, -1, "accept", ""};
}

}  // namespace lagsurf
