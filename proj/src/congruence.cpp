#include "lagsurf/congruence.hpp"

#include <string>

namespace lagsurf {

const char* to_string(Reason reason) {
  switch (reason) {
    case Reason::ok: return "ok";
    case Reason::congruence_fails: return "congruence_fails";
    case Reason::zero_class_klein_bottle: return "zero_class_klein_bottle";
    case Reason::zero_class_not_multiple_of_4: return "zero_class_not_multiple_of_4";
    case Reason::euler_too_large: return "euler_too_large";
  }
  return "unknown";
}

PontrjaginValue pontrjagin_square(const Mod2Class& a) { return PontrjaginValue(square(lift(a))); }

bool audin_check(const Mod2Class& a, std::int64_t chi) { return pontrjagin_square(a).congruent(chi); }

RealizabilityAnswer realizable_nonorientable(const Mod2Class& a, std::int64_t chi) {
  if (chi > 1) {
    throw CongruenceError("chi = " + std::to_string(chi) + " is not a non-orientable Euler number");
  }

  if (a.is_zero()) {
    // Givental's local surfaces give every chi divisible by 4 except the
    // Klein bottle, which cannot be null-homologous mod 2.
    if (chi % 4 != 0) return {Verdict::not_realizable, Reason::zero_class_not_multiple_of_4, {}, {}};
    if (chi == 0) return {Verdict::not_realizable, Reason::zero_class_klein_bottle, {}, {}};
    return {Verdict::realizable, Reason::ok, {}, {}};
  }

  const auto p = pontrjagin_square(a);
  const int max_chi = p.normalized();
  if (!p.congruent(chi)) return {Verdict::not_realizable, Reason::congruence_fails, 2 - max_chi, max_chi};
  // Unreachable for congruent chi <= 1, kept so the answer stays total.
  if (chi > max_chi) return {Verdict::not_realizable, Reason::euler_too_large, 2 - max_chi, max_chi};
  return {Verdict::realizable, Reason::ok, 2 - max_chi, max_chi};
}

int max_euler(const Mod2Class& a) {
  if (a.is_zero()) throw CongruenceError("maximal Euler number is only defined for nonzero classes");
  return pontrjagin_square(a).normalized();
}

int minimal_genus(const Mod2Class& a) {
  if (a.is_zero()) throw CongruenceError("minimal genus formula applies to nonzero classes only");
  return 2 - pontrjagin_square(a).normalized();
}

int zt_min_blowups(int t) {
  if (t < 0) throw CongruenceError("Z_t requires t >= 0");
  return t == 1 ? 3 : 2 * t + 2;
}

IntegralClass zt_class(int t, int k) {
  if (k < zt_min_blowups(t)) {
    throw CongruenceError("Z_" + std::to_string(t) + " needs at least " + std::to_string(zt_min_blowups(t)) +
                          " blow-ups, got k = " + std::to_string(k));
  }
  const auto x = RationalManifold::cp2_blowup(k);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k + 1), 0);
  coeffs[0] = t;
  for (int i = 1; i <= 2 * t + 1; ++i) coeffs[static_cast<std::size_t>(i)] = -1;
  if (2 * t + 2 <= k) coeffs[static_cast<std::size_t>(2 * t + 2)] = -(static_cast<std::int64_t>(t) - 1);
  return IntegralClass(x, std::move(coeffs));
}

bool sphere_class_check(const IntegralClass& z) {
  return pairing(z, canonical_class(z.ambient())) == 0 && square(z) == -2;
}

bool immersion_parity_check(const Mod2Class& a, std::int64_t chi) {
  return ((chi % 2) + 2) % 2 == w2_pairing(a);
}

std::optional<int> sphere_advisory(const Mod2Class& a) {
  const auto sig = orbit_signature(a);
  if (const auto* prod = std::get_if<ProductSignature>(&sig)) {
    if (prod->p == 1 && prod->q == 1) return -1;
    return std::nullopt;
  }
  const auto& s = std::get<BlowUpSignature>(sig);
  const int k = a.ambient().blowups();
  // Reduction of Z_{2l} is E1+...+E_{4l+2}; of Z_{2l+1} is H+E1+...+E_{4l+3}.
  if (s.a == 0 && s.m % 4 == 2) {
    const int t = (s.m - 2) / 2;
    if (zt_min_blowups(t) <= k) return t;
  }
  if (s.a == 1 && s.m % 4 == 3) {
    const int t = (s.m - 1) / 2;
    if (zt_min_blowups(t) <= k) return t;
  }
  return std::nullopt;
}

}  // namespace lagsurf
