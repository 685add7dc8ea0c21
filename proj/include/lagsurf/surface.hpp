#pragma once

#include <cstdint>
#include <string>

namespace lagsurf {

// Topological type of a closed surface, possibly immersed. Orientable
// surfaces carry a genus, non-orientable ones a crosscap count (N_k = kRP2).
struct SurfaceType {
  bool orientable = true;
  int genus = 0;       // orientable only
  int crosscaps = 0;   // non-orientable only, >= 1
  int components = 1;
  int double_points = 0;

  static SurfaceType sphere() { return {true, 0, 0, 1, 0}; }
  static SurfaceType torus() { return {true, 1, 0, 1, 0}; }
  static SurfaceType orientable_genus(int g) { return {true, g, 0, 1, 0}; }
  static SurfaceType nonorientable(int k) { return {false, 0, k, 1, 0}; }
  // Connected surface with the given Euler number and orientability.
  static SurfaceType from_euler(std::int64_t chi, bool orientable);

  std::int64_t euler() const;
  bool valid() const;
  // "S2", "T2", "Sigma_3", "N_4" (N_2 prints as "KB", N_1 as "RP2").
  std::string name() const;

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

// Connected sum; orientable iff both are.
SurfaceType connected_sum(const SurfaceType& lhs, const SurfaceType& rhs);

}  // namespace lagsurf
