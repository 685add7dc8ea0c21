#include "lagsurf/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lagsurf {

Box parse_box(std::string_view text) {
  std::vector<double> values;
  std::string s(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(',', pos);
    const std::string token = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed box '" + s + "'");
    }
    if (used != token.size() || !std::isfinite(v)) throw std::invalid_argument("malformed box '" + s + "'");
    values.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  Box box{};
  if (values.size() == 2) {
    box = Box::square(values[0], values[1]);
  } else if (values.size() == 4) {
    box = {values[0], values[1], values[2], values[3]};
  } else {
    throw std::invalid_argument("box needs 2 or 4 comma-separated numbers");
  }
  if (!(box.x1_lo < box.x1_hi) || !(box.x2_lo < box.x2_hi)) throw std::invalid_argument("box bounds must increase");
  return box;
}

// --- tangency search --------------------------------------------------------

namespace {

struct Residual {
  double f1, f2;
  double norm() const { return std::hypot(f1, f2); }
  bool finite() const { return std::isfinite(f1) && std::isfinite(f2); }
};

Residual residual(const GeneratingFunction& h1, const GeneratingFunction& h2, double x1, double x2) {
  const auto g1 = h1.gradient(x1, x2);
  const auto g2 = h2.gradient(x1, x2);
  return {g2[0] - g1[0], g2[1] - g1[1]};
}

std::array<double, 4> hessian_difference(const GeneratingFunction& h1, const GeneratingFunction& h2, double x1,
                                         double x2) {
  const auto a = h1.hessian(x1, x2);
  const auto b = h2.hessian(x1, x2);
  return {b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3]};
}

double seed_coordinate(double lo, double hi, int i, int grid) {
  // Cell centres, so seeds never sit on the box boundary.
  return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(grid);
}

std::vector<Tangency> merge(const std::vector<std::optional<Tangency>>& per_seed, const TangencyOptions& options) {
  std::vector<Tangency> out;
  for (const auto& t : per_seed) {
    if (!t) continue;
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Tangency& u) {
      return std::hypot(u.x1 - t->x1, u.x2 - t->x2) <= options.dedup_radius;
    });
    if (!duplicate) out.push_back(*t);
  }
  std::sort(out.begin(), out.end(), [](const Tangency& a, const Tangency& b) {
    return a.x1 != b.x1 ? a.x1 < b.x1 : a.x2 < b.x2;
  });
  return out;
}

void check_options(const TangencyOptions& options) {
  if (options.grid < 1) throw std::invalid_argument("grid must be positive");
  if (options.max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
}

}  // namespace

std::optional<Tangency> newton_tangency(const GeneratingFunction& h1, const GeneratingFunction& h2, const Box& box,
                                        double x1, double x2, const TangencyOptions& options) {
  Residual f = residual(h1, h2, x1, x2);
  if (!f.finite()) return std::nullopt;
  double r = f.norm();

  for (int iter = 0; iter < options.max_iterations && r > options.convergence; ++iter) {
    const auto j = hessian_difference(h1, h2, x1, x2);
    const double det = j[0] * j[3] - j[1] * j[2];
    if (!std::isfinite(det) || det == 0.0) break;
    const double dx1 = -(j[3] * f.f1 - j[1] * f.f2) / det;
    const double dx2 = -(-j[2] * f.f1 + j[0] * f.f2) / det;

    // Halve the step while the residual grows.
    double lambda = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving, lambda *= 0.5) {
      const double y1 = x1 + lambda * dx1;
      const double y2 = x2 + lambda * dx2;
      const Residual g = residual(h1, h2, y1, y2);
      if (g.finite() && g.norm() < r) {
        x1 = y1;
        x2 = y2;
        f = g;
        r = g.norm();
        improved = true;
        break;
      }
    }
    if (!improved) break;
    if (std::hypot(lambda * dx1, lambda * dx2) <= options.convergence * (1.0 + std::hypot(x1, x2))) break;
  }

  if (!(r <= options.accept_residual) || !box.contains(x1, x2)) return std::nullopt;
  const auto hess = hessian_difference(h1, h2, x1, x2);
  const double det = hess[0] * hess[3] - hess[1] * hess[2];
  if (!std::isfinite(det)) return std::nullopt;
  const bool transversal = std::abs(det) >= options.degenerate_det;
  const int sgn = transversal ? (det > 0 ? 1 : -1) : 0;
  return Tangency{x1, x2, det, sgn, transversal, r};
}

std::vector<Tangency> find_tangencies_serial(const GeneratingFunction& h1, const GeneratingFunction& h2,
                                             const Box& box, const TangencyOptions& options) {
  check_options(options);
  const int grid = options.grid;
  std::vector<std::optional<Tangency>> per_seed(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      per_seed[static_cast<std::size_t>(i * grid + j)] =
          newton_tangency(h1, h2, box, seed_coordinate(box.x1_lo, box.x1_hi, i, grid),
                          seed_coordinate(box.x2_lo, box.x2_hi, j, grid), options);
    }
  }
  return merge(per_seed, options);
}

std::vector<Tangency> find_tangencies(const GeneratingFunction& h1, const GeneratingFunction& h2, const Box& box,
                                      const TangencyOptions& options) {
  check_options(options);
  const int grid = options.grid;
  const int seeds = grid * grid;
  std::vector<std::optional<Tangency>> per_seed(static_cast<std::size_t>(seeds));
#pragma omp parallel for schedule(dynamic, 16)
  for (int s = 0; s < seeds; ++s) {
    const int i = s / grid;
    const int j = s % grid;
    per_seed[static_cast<std::size_t>(s)] =
        newton_tangency(h1, h2, box, seed_coordinate(box.x1_lo, box.x1_hi, i, grid),
                        seed_coordinate(box.x2_lo, box.x2_hi, j, grid), options);
  }
  return merge(per_seed, options);
}

// --- sign calculus ----------------------------------------------------------

namespace {

void require_sign(int value, const char* what) {
  if (value != 1 && value != -1) throw std::invalid_argument(std::string(what) + " must be +1 or -1");
}

int parity_sign(long long exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

int intersection_index(const OrientedSectionPair& pair, int sgn, int n) {
  require_sign(pair.s1, "s(L1)");
  require_sign(pair.s2, "s(L2)");
  require_sign(sgn, "sgn(p)");
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return parity_sign(static_cast<long long>(n) * (n - 1) / 2) * pair.s() * sgn;
}

int handle_sign(const OrientedSectionPair& pair, int sgn) {
  require_sign(pair.s1, "s(L1)");
  require_sign(pair.s2, "s(L2)");
  require_sign(sgn, "sgn(p)");
  return -pair.s() * sgn;
}

int handle_sign_from_index(int index, int n) {
  require_sign(index, "intersection index");
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return parity_sign(static_cast<long long>(n) * (n - 1) / 2 + 1) * index;
}

// --- surgery ----------------------------------------------------------------

SurgeryOutcome surgery_self(const LagrangianPiece& piece, int sign) {
  require_sign(sign, "handle sign");
  const auto& s = piece.surface;
  if (!s.valid() || s.components != 1) throw std::invalid_argument("self surgery needs a connected surface");
  if (s.double_points < 1) throw std::invalid_argument("self surgery needs a double point");

  // Positive handle on an orientable surface attaches T2; otherwise KB.
  const bool stays_orientable = s.orientable && sign == 1;
  auto result = SurfaceType::from_euler(s.euler() - 2, stays_orientable);
  result.double_points = s.double_points - 1;
  return {LagrangianPiece{result, piece.cls}, sign};
}

SurgeryOutcome surgery_join(const LagrangianPiece& lhs, const LagrangianPiece& rhs, int sign, int mutual_points) {
  require_sign(sign, "handle sign");
  if (mutual_points < 1) throw std::invalid_argument("join surgery needs an intersection point");
  if (!lhs.surface.valid() || !rhs.surface.valid() || lhs.surface.components != 1 || rhs.surface.components != 1) {
    throw std::invalid_argument("join surgery needs two connected surfaces");
  }
  auto joined = connected_sum(lhs.surface, rhs.surface);
  joined.double_points += mutual_points - 1;
  return {LagrangianPiece{joined, lhs.cls + rhs.cls}, sign};
}

// --- fixtures ---------------------------------------------------------------

namespace {

constexpr const char* kWhitneyPlus = "-(1/3)*(1 - x1^2 - x2^2)^(3/2)";
constexpr const char* kWhitneyMinus = "(1/3)*(1 - x1^2 - x2^2)^(3/2)";
// h_- plus s(x1) / (1 + 25 x2^2), where s is a smooth step of height 0.3
// centred at x1 = -0.4 with slope 3 (1 + u^2)^(-3/2), u = 20 (x1 + 0.4).
// Along x2 = 0 the slope of s exceeds 1 near the centre, which produces the
// two tangencies with the section x1; the x2 profile keeps d/dx2 of the sum
// signed like -x2, so no tangency leaves the axis. s is monotone, so the
// deformation adds no new intersection with L_+.
constexpr const char* kDeformedMinus =
    "(1/3)*(1 - x1^2 - x2^2)^(3/2)"
    " + 0.15*(1 + 20*(x1 + 0.4)/sqrt(1 + (20*(x1 + 0.4))^2))/(1 + 25*x2^2)";

}  // namespace

GeneratingFunction whitney_plus() { return parse_generating_function(kWhitneyPlus); }
GeneratingFunction whitney_minus() { return parse_generating_function(kWhitneyMinus); }
GeneratingFunction deformed_minus() { return parse_generating_function(kDeformedMinus); }

GeneratingFunction resolve_fixture(std::string_view name) {
  if (name == "whitney+") return whitney_plus();
  if (name == "whitney-") return whitney_minus();
  if (name == "deformed-") return deformed_minus();
  if (name.rfind("const:", 0) == 0) return parse_generating_function(name.substr(6));
  throw std::invalid_argument("unknown generating function '" + std::string(name) +
                              "' (expected whitney+, whitney-, deformed- or const:<expr>)");
}

Box deformed_strip_box() { return {-0.9, 0.3, -0.3, 0.3}; }

}  // namespace lagsurf
