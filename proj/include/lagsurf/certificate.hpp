#pragma once

// Construction certificates: a linear replay machine whose base steps and
// transformations are the explicit constructions of Lagrangian surfaces in
// rational 4-manifolds, a generator that picks a construction for a
// (class, Euler number) query, and an independent verifier.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lagsurf/congruence.hpp"
#include "lagsurf/lattice.hpp"
#include "lagsurf/surface.hpp"

namespace lagsurf {

struct LagrangianState {
  RationalManifold ambient;
  Mod2Class cls;
  SurfaceType surface;
  std::int64_t chi;

  // chi agrees with the surface and the class lives in the ambient.
  bool consistent() const;
  std::string describe() const;

  friend bool operator==(const LagrangianState&, const LagrangianState&) = default;
};

namespace step {

// Real part of CP2: RP2 in class H.
struct RealRP2 {
  bool operator==(const RealRP2&) const = default;
};
// Clifford torus in CP2, null-homologous.
struct CliffordTorus {
  bool operator==(const CliffordTorus&) const = default;
};
// Real locus of CP2 # -CP2: Klein bottle in H+E1.
struct RealKleinBottle {
  bool operator==(const RealKleinBottle&) const = default;
};
// Lagrangian sphere in the reduction of Z_t.
struct LagrangianSphere {
  int t = 0;
  bool operator==(const LagrangianSphere&) const = default;
};
// Graph of the antipodal map in S2 x S2, class B+F.
struct AntidiagonalSphere {
  bool operator==(const AntidiagonalSphere&) const = default;
};
// Local surface N_{4l+2} in a Darboux ball of `ambient`; null-homologous.
struct GiventalSurface {
  int l = 1;
  RationalManifold ambient = RationalManifold::cp2_blowup(0);
  bool operator==(const GiventalSurface&) const = default;
};
// Blow-up at a point of L: new exceptional class, one more crosscap.
struct BlowUp {
  bool operator==(const BlowUp&) const = default;
};
// Blow-up away from L: new exceptional class with coefficient zero.
struct PadBlowUp {
  bool operator==(const PadBlowUp&) const = default;
};
// L -> L # 4l RP2 in the same class.
struct AddFourCrosscaps {
  int l = 1;
  bool operator==(const AddFourCrosscaps&) const = default;
};
// perm[i] (1-based) is the new index of E_{i+1}.
struct Relabel {
  std::vector<int> perm;
  bool operator==(const Relabel&) const = default;
};
// Real Klein bottle of CP2 # -CP2 carried into the fiber sum S2 x S2 as F.
struct FiberSumToS2xS2 {
  bool operator==(const FiberSumToS2xS2&) const = default;
};
// Exchange the S2 factors: B <-> F.
struct SwapFactors {
  bool operator==(const SwapFactors&) const = default;
};

}  // namespace step

using CertificateStep =
    std::variant<step::RealRP2, step::CliffordTorus, step::RealKleinBottle, step::LagrangianSphere,
                 step::AntidiagonalSphere, step::GiventalSurface, step::BlowUp, step::PadBlowUp,
                 step::AddFourCrosscaps, step::Relabel, step::FiberSumToS2xS2, step::SwapFactors>;

bool is_base_step(const CertificateStep& s);
// Operation name as used in certificate files, e.g. "LagrangianSphere".
std::string op_name(const CertificateStep& s);
// Compact form with parameters, e.g. "LagrangianSphere(1)".
std::string summary(const CertificateStep& s);
std::string summary(const std::vector<CertificateStep>& steps);

// Blow-up count above which replay refuses to grow the ambient.
inline constexpr int kMaxBlowups = 4096;

class StepError : public std::runtime_error {
 public:
  StepError(std::string rule, const std::string& detail)
      : std::runtime_error(rule + ": " + detail), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

// Base steps require `prior` to be empty; transformations require a state.
LagrangianState apply_step(const std::optional<LagrangianState>& prior, const CertificateStep& s);

struct ConstructionCertificate {
  RationalManifold manifold;
  std::vector<CertificateStep> steps;
  LagrangianState claim;
};

// Replays all steps; throws StepError on the first failure.
LagrangianState replay(const std::vector<CertificateStep>& steps);

enum class GenerationFailure {
  invalid_query,     // chi is not an Euler number of the requested surface kind
  not_realizable,    // the oracle says no; `reason` carries why
  no_construction,   // oracle says yes but no step sequence fits the ambient
};

class GenerationError : public std::runtime_error {
 public:
  GenerationError(GenerationFailure failure, Reason reason, const std::string& what)
      : std::runtime_error(what), failure_(failure), reason_(reason) {}
  GenerationFailure failure() const { return failure_; }
  Reason reason() const { return reason_; }

 private:
  GenerationFailure failure_;
  Reason reason_;
};

// Certificate ending at (A.ambient, A, N_{2-chi}, chi). chi = 2 asks for a
// Lagrangian sphere.
ConstructionCertificate generate(const Mod2Class& a, std::int64_t chi);

struct VerifyResult {
  bool accepted = false;
  int step_index = -1;  // first failing step, or steps.size() for claim checks
  std::string rule;
  std::string detail;
};

VerifyResult verify(const ConstructionCertificate& c);

}  // namespace lagsurf
