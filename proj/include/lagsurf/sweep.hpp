#pragma once

// Whole-manifold sweeps: report rows for every class, the attainment sweep
// (oracle -> generator -> verifier) and the self-test invariant suite.
// Each parallel entry point has a serial twin with identical output.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagsurf/lattice.hpp"

namespace lagsurf {

struct ReportRow {
  std::string cls;
  int p_residue = 0;
  int p_normalized = 0;
  std::optional<int> minimal_genus;  // none for the zero class
  std::int64_t max_euler = 0;        // -4 for the zero class
  std::string certificate;           // step summary, or "none:<reason>"
  bool certified = false;
};

ReportRow classify_row(const Mod2Class& a);
std::vector<ReportRow> classify_all(const RationalManifold& x, bool include_zero);
std::vector<ReportRow> classify_all_serial(const RationalManifold& x, bool include_zero);

inline constexpr const char* kReportHeader = "class\tP_residue\tP\tminimal_genus\tmax_euler\tcertificate";
std::string format_row(const ReportRow& row);

struct SweepFailure {
  int k;
  std::string cls;
  std::int64_t chi;
  std::string what;
  friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepResult {
  std::size_t checked = 0;
  std::vector<SweepFailure> failures;
  bool ok() const { return failures.empty(); }
};

// For every k <= k_max, every nonzero A in CP2BlowUp(k) and chi = |P(A)| - 4j
// (j < depth): the oracle agrees, generate succeeds, verify accepts and the
// claimed crosscap count is 2 - chi. Failures are listed in (k, class, j) order.
SweepResult attainment_sweep(int k_max, int depth = 1);
SweepResult attainment_sweep_serial(int k_max, int depth = 1);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The invariant suite behind `selftest`; deterministic for a given k_max.
std::vector<CheckResult> run_selftest(int k_max);

}  // namespace lagsurf
