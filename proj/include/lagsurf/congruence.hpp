#pragma once

// Pontrjagin square arithmetic and the realizability oracle for
// non-orientable Lagrangian surfaces in rational 4-manifolds.

#include <optional>
#include <stdexcept>

#include "lagsurf/lattice.hpp"

namespace lagsurf {

class CongruenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Value in Z/4. `residue()` is in {0,1,2,3}; `normalized()` is the
// representative in {-2,-1,0,1}.
class PontrjaginValue {
 public:
  explicit PontrjaginValue(std::int64_t value) : residue_(static_cast<int>(((value % 4) + 4) % 4)) {}
  int residue() const { return residue_; }
  int normalized() const { return residue_ >= 2 ? residue_ - 4 : residue_; }
  bool congruent(std::int64_t value) const { return PontrjaginValue(value).residue_ == residue_; }

  friend bool operator==(const PontrjaginValue&, const PontrjaginValue&) = default;

 private:
  int residue_;
};

enum class Verdict { realizable, not_realizable };

enum class Reason {
  ok,
  congruence_fails,
  zero_class_klein_bottle,
  zero_class_not_multiple_of_4,
  euler_too_large,
};

const char* to_string(Reason reason);

struct RealizabilityAnswer {
  Verdict verdict;
  Reason reason;
  std::optional<int> minimal_genus;
  std::optional<int> max_euler;

  bool realizable() const { return verdict == Verdict::realizable; }
};

PontrjaginValue pontrjagin_square(const Mod2Class& a);
bool audin_check(const Mod2Class& a, std::int64_t chi);

// Throws CongruenceError for chi > 1, which is not the Euler number of any
// non-orientable closed surface.
RealizabilityAnswer realizable_nonorientable(const Mod2Class& a, std::int64_t chi);

// 2 - |P(A)|; throws for the zero class.
int minimal_genus(const Mod2Class& a);
int max_euler(const Mod2Class& a);

// Z_t = tH - E1 - ... - E_{2t+1} - (t-1)E_{2t+2}, padded to length k+1.
// For t = 1 the last coefficient vanishes, so k = 3 is admitted.
IntegralClass zt_class(int t, int k);
// Smallest k for which zt_class(t, k) is defined.
int zt_min_blowups(int t);

// Arithmetic half of the Lagrangian sphere criterion: Z.K = 0 and Z.Z = -2.
bool sphere_class_check(const IntegralClass& z);

// chi == <w2, A> (mod 2).
bool immersion_parity_check(const Mod2Class& a, std::int64_t chi);

// Advisory for chi = 2 queries: is A the reduction of a Z_t that fits in the
// ambient, or B+F in S2 x S2? Returns the Z_t parameter, or -1 for B+F.
std::optional<int> sphere_advisory(const Mod2Class& a);

}  // namespace lagsurf
