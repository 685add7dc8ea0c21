#include "lagsurf/surface.hpp"

#include <stdexcept>

namespace lagsurf {

SurfaceType SurfaceType::from_euler(std::int64_t chi, bool orientable) {
  if (orientable) {
    if (chi > 2 || chi % 2 != 0) throw std::invalid_argument("no orientable surface with chi = " + std::to_string(chi));
    return orientable_genus(static_cast<int>((2 - chi) / 2));
  }
  if (chi > 1) throw std::invalid_argument("no non-orientable surface with chi = " + std::to_string(chi));
  return nonorientable(static_cast<int>(2 - chi));
}

std::int64_t SurfaceType::euler() const {
  // Connected surfaces only; multi-component states never reach a claim.
  return orientable ? 2 - 2 * static_cast<std::int64_t>(genus) : 2 - static_cast<std::int64_t>(crosscaps);
}

bool SurfaceType::valid() const {
  if (components < 1 || double_points < 0) return false;
  if (orientable) return genus >= 0 && crosscaps == 0;
  return crosscaps >= 1 && genus == 0;
}

std::string SurfaceType::name() const {
  if (orientable) {
    if (genus == 0) return "S2";
    if (genus == 1) return "T2";
    return "Sigma_" + std::to_string(genus);
  }
  if (crosscaps == 1) return "RP2";
  if (crosscaps == 2) return "KB";
  return "N_" + std::to_string(crosscaps);
}

SurfaceType connected_sum(const SurfaceType& lhs, const SurfaceType& rhs) {
  const std::int64_t chi = lhs.euler() + rhs.euler() - 2;
  auto out = SurfaceType::from_euler(chi, lhs.orientable && rhs.orientable);
  out.double_points = lhs.double_points + rhs.double_points;
  return out;
}

}  // namespace lagsurf
