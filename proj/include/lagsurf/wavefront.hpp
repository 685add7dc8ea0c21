#pragma once

// Generating-function calculus for pairs of Lagrangian sections of T*R^2:
// tangency search, the sign of a tangency, intersection indices, handle
// signs and the topology of the surgered surface.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lagsurf/expression.hpp"
#include "lagsurf/lattice.hpp"
#include "lagsurf/surface.hpp"

namespace lagsurf {

struct Box {
  double x1_lo, x1_hi, x2_lo, x2_hi;

  static Box square(double lo, double hi) { return {lo, hi, lo, hi}; }
  bool contains(double x1, double x2) const { return x1 >= x1_lo && x1 <= x1_hi && x2 >= x2_lo && x2 <= x2_hi; }
};

// "lo,hi" for a square box or "x1lo,x1hi,x2lo,x2hi".
Box parse_box(std::string_view text);

struct Tangency {
  double x1;
  double x2;
  double hessian_det;   // det Hess(h2 - h1) at the point
  int sgn;              // sign of hessian_det; 0 when degenerate
  bool transversal;
  double residual;      // |grad(h2 - h1)| at the point
};

struct TangencyOptions {
  int grid = 64;
  int max_iterations = 50;
  double convergence = 1e-12;
  double accept_residual = 1e-10;
  double dedup_radius = 1e-6;
  double degenerate_det = 1e-8;
};

// Solutions of grad h1 = grad h2 in `box`, seeded by damped Newton on a
// grid x grid lattice. Sorted by (x1, x2). Seeds run in parallel.
std::vector<Tangency> find_tangencies(const GeneratingFunction& h1, const GeneratingFunction& h2, const Box& box,
                                      const TangencyOptions& options = {});
// Single-threaded reference with the same seeds and the same output.
std::vector<Tangency> find_tangencies_serial(const GeneratingFunction& h1, const GeneratingFunction& h2,
                                             const Box& box, const TangencyOptions& options = {});

// One Newton run from a seed; nullopt when it diverges, leaves the box or
// lands on a non-finite value.
std::optional<Tangency> newton_tangency(const GeneratingFunction& h1, const GeneratingFunction& h2, const Box& box,
                                        double x1, double x2, const TangencyOptions& options = {});

// Orientation signs of the two sections relative to the x-plane.
struct OrientedSectionPair {
  int s1 = 1;
  int s2 = 1;
  int s() const { return s1 * s2; }
};

// (-1)^{n(n-1)/2} s(L1,L2) sgn(p).
int intersection_index(const OrientedSectionPair& pair, int sgn, int n);
// Sign of the Lagrangian handle: -s(L1,L2) sgn(p).
int handle_sign(const OrientedSectionPair& pair, int sgn);
// Handle sign from an intersection index in dimension n: (-1)^{n(n-1)/2+1} ind.
int handle_sign_from_index(int index, int n);

// A possibly immersed Lagrangian piece and its mod-2 class.
struct LagrangianPiece {
  SurfaceType surface;
  Mod2Class cls;
};

struct SurgeryOutcome {
  LagrangianPiece result;
  int handle_sign;
};

// Surgery at a transversal self-intersection of a connected piece.
// Orientable: positive handle adds T2, negative adds KB. Non-orientable: KB.
SurgeryOutcome surgery_self(const LagrangianPiece& piece, int handle_sign);
// Surgery at one of the mutual_points intersections of two different pieces:
// connected sum, classes add, and the other mutual intersections become
// double points of the result.
SurgeryOutcome surgery_join(const LagrangianPiece& lhs, const LagrangianPiece& rhs, int handle_sign,
                            int mutual_points = 1);

// Built-in generating functions.
GeneratingFunction whitney_plus();     // -(1/3)(1-|x|^2)^(3/2)
GeneratingFunction whitney_minus();    // +(1/3)(1-|x|^2)^(3/2)
GeneratingFunction deformed_minus();   // whitney_minus plus a fold near (-0.4, 0)
// "whitney+", "whitney-", "deformed-" or "const:<expr>".
GeneratingFunction resolve_fixture(std::string_view name);

// Box used for the deformed pair against the section x1.
Box deformed_strip_box();

}  // namespace lagsurf
