#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lagsurf/congruence.hpp"
#include "oracle.hpp"

using namespace lagsurf;

namespace {

Mod2Class cls(const RationalManifold& x, const char* text) { return parse_mod2_class(x, text); }
const RationalManifold cp2 = RationalManifold::cp2_blowup(0);
const RationalManifold s2s2 = RationalManifold::s2xs2();

}  // namespace

TEST_CASE("Pontrjagin value normalization") {
  CHECK(PontrjaginValue(-5).residue() == 3);
  CHECK(PontrjaginValue(-5).normalized() == -1);
  CHECK(PontrjaginValue(2).normalized() == -2);
  CHECK(PontrjaginValue(1).normalized() == 1);
  CHECK(PontrjaginValue(4).normalized() == 0);
  for (int v = -50; v <= 50; ++v) {
    const int r = PontrjaginValue(v).normalized();
    CHECK(r >= -2);
    CHECK(r <= 1);
    CHECK(oracle::mod4(v - r) == 0);
  }
}

TEST_CASE("Pontrjagin square examples") {
  const auto p1 = pontrjagin_square(cls(RationalManifold::cp2_blowup(5), "E1+E2+E3+E4+E5"));
  CHECK(p1.residue() == 3);
  CHECK(p1.normalized() == -1);
  const auto p2 = pontrjagin_square(cls(RationalManifold::cp2_blowup(4), "H+E1+E2+E3+E4"));
  CHECK(p2.residue() == 1);
  CHECK(p2.normalized() == 1);
  const auto p3 = pontrjagin_square(cls(s2s2, "B+F"));
  CHECK(p3.residue() == 2);
  CHECK(p3.normalized() == -2);
}

TEST_CASE("Pontrjagin square against the closed forms") {
  for (int k = 0; k <= 9; ++k) {
    for (const auto& a : enumerate_mod2_classes(RationalManifold::cp2_blowup(k), true)) {
      const auto sig = std::get<BlowUpSignature>(orbit_signature(a));
      CHECK(pontrjagin_square(a).normalized() == oracle::blowup_p(sig.a, sig.m));
    }
  }
  for (const auto& a : enumerate_mod2_classes(s2s2, true)) {
    const auto sig = std::get<ProductSignature>(orbit_signature(a));
    CHECK(pontrjagin_square(a).normalized() == oracle::product_p(sig.p, sig.q));
  }
}

TEST_CASE("audin check") {
  CHECK(audin_check(cls(cp2, "H"), 1));
  CHECK_FALSE(audin_check(cls(cp2, "H"), 0));
  CHECK(audin_check(cls(s2s2, "F"), 0));
  CHECK(audin_check(cls(cp2, "H"), -3));
}

TEST_CASE("realizability oracle") {
  const auto x2 = RationalManifold::cp2_blowup(2);
  const auto r = realizable_nonorientable(cls(x2, "H+E1+E2"), -1);
  CHECK(r.realizable());
  CHECK(r.reason == Reason::ok);
  CHECK(r.minimal_genus == 3);
  CHECK(r.max_euler == -1);

  const auto kb = realizable_nonorientable(Mod2Class::zero(x2), 0);
  CHECK_FALSE(kb.realizable());
  CHECK(kb.reason == Reason::zero_class_klein_bottle);

  CHECK(realizable_nonorientable(Mod2Class::zero(x2), -4).realizable());
  CHECK(realizable_nonorientable(Mod2Class::zero(s2s2), -8).realizable());
  const auto odd = realizable_nonorientable(Mod2Class::zero(x2), -2);
  CHECK(odd.reason == Reason::zero_class_not_multiple_of_4);
  CHECK(realizable_nonorientable(Mod2Class::zero(x2), 1).reason == Reason::zero_class_not_multiple_of_4);

  const auto no = realizable_nonorientable(cls(cp2, "H"), 0);
  CHECK_FALSE(no.realizable());
  CHECK(no.reason == Reason::congruence_fails);

  CHECK_THROWS_AS(realizable_nonorientable(cls(cp2, "H"), 2), CongruenceError);
  CHECK_THROWS_AS(realizable_nonorientable(cls(cp2, "H"), 5), CongruenceError);
}

TEST_CASE("minimal genus and max Euler") {
  CHECK(minimal_genus(cls(RationalManifold::cp2_blowup(1), "E1")) == 3);
  CHECK(minimal_genus(cls(cp2, "H")) == 1);
  CHECK(minimal_genus(cls(s2s2, "B+F")) == 4);
  CHECK(max_euler(cls(s2s2, "B+F")) == -2);
  CHECK_THROWS_AS(minimal_genus(Mod2Class::zero(cp2)), CongruenceError);
  for (int k = 0; k <= 8; ++k) {
    for (const auto& a : enumerate_mod2_classes(RationalManifold::cp2_blowup(k), false)) {
      const int g = minimal_genus(a);
      CHECK(g >= 1);
      CHECK(g <= 4);
      CHECK(oracle::chi_nonorientable(g) == max_euler(a));
      CHECK(realizable_nonorientable(a, max_euler(a)).realizable());
      for (int chi = max_euler(a) + 1; chi <= 1; ++chi) CHECK_FALSE(realizable_nonorientable(a, chi).realizable());
    }
  }
}

TEST_CASE("Z_t classes") {
  CHECK(zt_class(1, 4).coeffs() == std::vector<std::int64_t>{1, -1, -1, -1, 0});
  CHECK(zt_class(2, 6).coeffs() == std::vector<std::int64_t>{2, -1, -1, -1, -1, -1, -1});
  CHECK(zt_class(0, 2).coeffs() == std::vector<std::int64_t>{0, -1, 1});
  CHECK(zt_class(1, 3).coeffs() == std::vector<std::int64_t>{1, -1, -1, -1});
  CHECK_THROWS_AS(zt_class(2, 5), CongruenceError);
  CHECK_THROWS_AS(zt_class(-1, 5), CongruenceError);
  CHECK(zt_min_blowups(0) == 2);
  CHECK(zt_min_blowups(1) == 3);
  CHECK(zt_min_blowups(5) == 12);
}

TEST_CASE("property: Z_t arithmetic for t <= 100") {
  for (int t = 0; t <= 100; ++t) {
    const int k = 2 * t + 2;
    const auto z = zt_class(t, k);
    CHECK(z.coeffs() == oracle::zt(t, k));
    const auto g = oracle::gram(false, k);
    const auto kx = canonical_class(RationalManifold::cp2_blowup(k)).coeffs();
    CHECK(oracle::form(g, z.coeffs(), kx) == 0);
    CHECK(oracle::form(g, z.coeffs(), z.coeffs()) == -2);
    CHECK(sphere_class_check(z));
    // Reductions alternate between the two sequences.
    const auto sig = std::get<BlowUpSignature>(orbit_signature(mod2_reduce(z)));
    if (t % 2 == 0) {
      CHECK(sig == BlowUpSignature{0, 2 * t + 2});
    } else {
      CHECK(sig == BlowUpSignature{1, 2 * t + 1});
    }
  }
}

TEST_CASE("sphere criterion") {
  CHECK(sphere_class_check(zt_class(3, 8)));
  CHECK_FALSE(sphere_class_check(IntegralClass::basis(cp2, 0)));
  CHECK(sphere_class_check(IntegralClass(s2s2, {1, -1})));
  CHECK_FALSE(sphere_class_check(IntegralClass(s2s2, {1, 1})));
  // E1 - E2 has square -2 and pairs to zero with K.
  CHECK(sphere_class_check(IntegralClass(RationalManifold::cp2_blowup(2), {0, 1, -1})));
}

TEST_CASE("sphere advisory") {
  CHECK(sphere_advisory(cls(RationalManifold::cp2_blowup(2), "E1+E2")) == 0);
  CHECK(sphere_advisory(cls(RationalManifold::cp2_blowup(5), "H+E1+E3+E5")) == 1);
  CHECK(sphere_advisory(cls(s2s2, "B+F")) == -1);
  CHECK_FALSE(sphere_advisory(cls(s2s2, "B")).has_value());
  CHECK_FALSE(sphere_advisory(cls(cp2, "H")).has_value());
}

TEST_CASE("immersion parity") {
  CHECK(immersion_parity_check(cls(cp2, "H"), 1));
  CHECK_FALSE(immersion_parity_check(cls(cp2, "H"), 0));
  CHECK(immersion_parity_check(cls(RationalManifold::cp2_blowup(2), "E1+E2"), -2));
}

TEST_CASE("property: lift invariance") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> kd(0, 10), cd(-500, 500), bit(0, 1);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto x = RationalManifold::cp2_blowup(kd(rng));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(x.b2()));
    std::vector<std::int64_t> shifted(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      bits[i] = static_cast<std::uint8_t>(bit(rng));
      shifted[i] = bits[i] + 2 * cd(rng);
    }
    const Mod2Class a(x, bits);
    const auto g = oracle::gram(false, x.blowups());
    CHECK(oracle::mod4(oracle::form(g, shifted, shifted)) == pontrjagin_square(a).residue());
  }
}

TEST_CASE("property: quadratic refinement, exhaustive k <= 6") {
  for (int k = 0; k <= 6; ++k) {
    const auto classes = enumerate_mod2_classes(RationalManifold::cp2_blowup(k), true);
    for (const auto& a : classes) {
      for (const auto& b : classes) {
        const int cross = oracle::mod4(pairing(lift(a), lift(b))) % 2;
        CHECK(pontrjagin_square(a + b).residue() ==
              oracle::mod4(pontrjagin_square(a).residue() + pontrjagin_square(b).residue() + 2 * cross));
      }
    }
  }
}

TEST_CASE("property: Audin implies parity, exhaustive k <= 8") {
  for (int k = 0; k <= 8; ++k) {
    for (const auto& a : enumerate_mod2_classes(RationalManifold::cp2_blowup(k), true)) {
      for (int chi = -10; chi <= 1; ++chi) {
        if (audin_check(a, chi)) CHECK(immersion_parity_check(a, chi));
      }
    }
  }
}

TEST_CASE("property: monotone under four crosscaps") {
  for (int k = 0; k <= 6; ++k) {
    for (const auto& a : enumerate_mod2_classes(RationalManifold::cp2_blowup(k), true)) {
      for (int chi = -12; chi <= 1; ++chi) {
        if (realizable_nonorientable(a, chi).realizable()) CHECK(realizable_nonorientable(a, chi - 4).realizable());
      }
    }
  }
}

TEST_CASE("formula reproduction for m <= 100") {
  for (int m = 0; m <= 100; ++m) {
    const auto x = RationalManifold::cp2_blowup(m);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m + 1), 1);
    bits[0] = 0;
    CHECK(pontrjagin_square(Mod2Class(x, bits)).residue() == oracle::mod4(-m));
    bits[0] = 1;
    CHECK(pontrjagin_square(Mod2Class(x, bits)).residue() == oracle::mod4(1 - m));
  }
}
