#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lagsurf/lattice.hpp"
#include "oracle.hpp"

using namespace lagsurf;

namespace {

IntegralClass vec(const RationalManifold& x, std::vector<std::int64_t> c) { return IntegralClass(x, std::move(c)); }

}  // namespace

TEST_CASE("manifold descriptors") {
  const auto x = RationalManifold::cp2_blowup(3);
  CHECK(x.b2() == 4);
  CHECK(x.name() == "cp2+3");
  CHECK(RationalManifold::s2xs2().b2() == 2);
  CHECK(parse_manifold("CP2") == RationalManifold::cp2_blowup(0));
  CHECK(parse_manifold("cp2+12") == RationalManifold::cp2_blowup(12));
  CHECK(parse_manifold("S2xS2") == RationalManifold::s2xs2());
  CHECK_THROWS_AS(parse_manifold("cp2+"), LatticeError);
  CHECK_THROWS_AS(parse_manifold("cp2+-1"), LatticeError);
  CHECK_THROWS_AS(parse_manifold("t4"), LatticeError);
}

TEST_CASE("form matches the oracle Gram matrix") {
  for (int k = 0; k <= 6; ++k) {
    const auto x = RationalManifold::cp2_blowup(k);
    const auto g = oracle::gram(false, k);
    for (int i = 0; i < x.b2(); ++i) {
      for (int j = 0; j < x.b2(); ++j) CHECK(x.form(i, j) == g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  const auto y = RationalManifold::s2xs2();
  CHECK(y.form(0, 1) == 1);
  CHECK(y.form(0, 0) == 0);
}

TEST_CASE("pairing examples") {
  const auto x1 = RationalManifold::cp2_blowup(1);
  CHECK(pairing(IntegralClass::basis(x1, 0), IntegralClass::basis(x1, 0)) == 1);

  const auto x4 = RationalManifold::cp2_blowup(4);
  CHECK(pairing(vec(x4, {1, -1, -1, -1, 0}), canonical_class(x4)) == 0);

  const auto y = RationalManifold::s2xs2();
  const auto bf = vec(y, {1, -1});
  CHECK(pairing(bf, bf) == -2);

  CHECK_THROWS_AS(pairing(IntegralClass::zero(x1), IntegralClass::zero(x4)), LatticeError);
  CHECK_THROWS_AS(IntegralClass(x1, {1, 2, 3}), LatticeError);
}

TEST_CASE("canonical classes") {
  CHECK(canonical_class(RationalManifold::cp2_blowup(0)).coeffs() == std::vector<std::int64_t>{-3});
  CHECK(canonical_class(RationalManifold::cp2_blowup(2)).coeffs() == std::vector<std::int64_t>{-3, 1, 1});
  const auto k = canonical_class(RationalManifold::s2xs2());
  CHECK(k.coeffs() == std::vector<std::int64_t>{-2, -2});
  CHECK(square(k) == 8);
  for (int n = 0; n <= 9; ++n) CHECK(square(canonical_class(RationalManifold::cp2_blowup(n))) == 9 - n);
}

TEST_CASE("reduction and lift") {
  const auto x6 = RationalManifold::cp2_blowup(6);
  CHECK(to_string(mod2_reduce(vec(x6, {2, -1, -1, -1, -1, -1, -1}))) == "E1+E2+E3+E4+E5+E6");
  const auto x4 = RationalManifold::cp2_blowup(4);
  CHECK(to_string(mod2_reduce(vec(x4, {1, -1, -1, -1, 0}))) == "H+E1+E2+E3");
  CHECK(mod2_reduce(IntegralClass::zero(x4)).is_zero());

  const auto x1 = RationalManifold::cp2_blowup(1);
  CHECK(lift(parse_mod2_class(x1, "H+E1")).coeffs() == std::vector<std::int64_t>{1, 1});
  CHECK(lift(Mod2Class::zero(x1)).coeffs() == std::vector<std::int64_t>{0, 0});
  CHECK(lift(parse_mod2_class(RationalManifold::s2xs2(), "B+F")).coeffs() == std::vector<std::int64_t>{1, 1});

  // Negative odd coefficients reduce to 1.
  CHECK(to_string(mod2_reduce(vec(x1, {-3, -2}))) == "H");
}

TEST_CASE("w2 pairing") {
  CHECK(w2_pairing(parse_mod2_class(RationalManifold::cp2_blowup(0), "H")) == 1);
  CHECK(w2_pairing(parse_mod2_class(RationalManifold::s2xs2(), "F")) == 0);
  CHECK(w2_pairing(parse_mod2_class(RationalManifold::cp2_blowup(2), "E1+E2")) == 0);
}

TEST_CASE("orbit signatures") {
  const auto x6 = RationalManifold::cp2_blowup(6);
  CHECK(std::get<BlowUpSignature>(orbit_signature(parse_mod2_class(x6, "H+E2+E5"))) == BlowUpSignature{1, 2});
  CHECK(std::get<BlowUpSignature>(orbit_signature(parse_mod2_class(RationalManifold::cp2_blowup(3), "E3"))) ==
        BlowUpSignature{0, 1});
  CHECK(std::get<ProductSignature>(orbit_signature(parse_mod2_class(RationalManifold::s2xs2(), "B"))) ==
        ProductSignature{1, 0});
}

TEST_CASE("signatures are permutation invariants") {
  // Equal signature iff some permutation of the exceptional bits matches.
  const auto x = RationalManifold::cp2_blowup(4);
  const auto classes = enumerate_mod2_classes(x, true);
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      auto bits = a.bits();
      bool related = false;
      std::vector<int> perm{1, 2, 3, 4};
      do {
        std::vector<std::uint8_t> moved(bits.size());
        moved[0] = bits[0];
        for (int i = 0; i < 4; ++i) moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = bits[static_cast<std::size_t>(i + 1)];
        related = related || moved == b.bits();
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK((orbit_signature(a) == orbit_signature(b)) == related);
    }
  }
}

TEST_CASE("enumeration") {
  const auto one = enumerate_mod2_classes(RationalManifold::cp2_blowup(1), false);
  REQUIRE(one.size() == 3);
  CHECK(to_string(one[0]) == "H");
  CHECK(to_string(one[1]) == "E1");
  CHECK(to_string(one[2]) == "H+E1");
  CHECK(enumerate_mod2_classes(RationalManifold::s2xs2(), true).size() == 4);
  CHECK(enumerate_mod2_classes(RationalManifold::cp2_blowup(12), false).size() == 8191);
  for (const auto& a : enumerate_mod2_classes(RationalManifold::cp2_blowup(5), true)) {
    CHECK(Mod2Class::from_index(a.ambient(), a.index()) == a);
  }
}

TEST_CASE("text forms") {
  const auto x = RationalManifold::cp2_blowup(3);
  CHECK(to_string(parse_mod2_class(x, "E3+H+E1")) == "H+E1+E3");
  CHECK(to_string(parse_mod2_class(x, "E1+E1")) == "0");
  CHECK(to_string(parse_mod2_class(x, " 0 ")) == "0");
  CHECK_THROWS_AS(parse_mod2_class(x, "E4"), LatticeError);
  CHECK_THROWS_AS(parse_mod2_class(x, "B"), LatticeError);
  CHECK_THROWS_AS(parse_mod2_class(x, "H++E1"), LatticeError);
  CHECK_THROWS_AS(parse_mod2_class(x, ""), LatticeError);
  CHECK(to_string(parse_mod2_class(RationalManifold::s2xs2(), "F+B")) == "B+F");

  const auto z = parse_integral_class(x, "(2,-1,0,7)");
  CHECK(z.coeffs() == std::vector<std::int64_t>{2, -1, 0, 7});
  CHECK(to_string(z) == "(2,-1,0,7)");
  CHECK_THROWS_AS(parse_integral_class(x, "(1,2)"), LatticeError);
  CHECK_THROWS_AS(parse_integral_class(x, "1,2,3,4"), LatticeError);
}

TEST_CASE("property: bilinear, symmetric, reduction is a homomorphism") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> kd(-1, 10), cd(-40, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = kd(rng);
    const auto x = k < 0 ? RationalManifold::s2xs2() : RationalManifold::cp2_blowup(k);
    const auto g = oracle::gram(k < 0, k);
    auto draw = [&] {
      std::vector<std::int64_t> c(static_cast<std::size_t>(x.b2()));
      for (auto& v : c) v = cd(rng);
      return c;
    };
    const auto a = draw(), b = draw(), c = draw();
    const IntegralClass za(x, a), zb(x, b), zc(x, c);
    CHECK(pairing(za, zb) == oracle::form(g, a, b));
    CHECK(pairing(za, zb) == pairing(zb, za));
    CHECK(pairing(za + zb, zc) == pairing(za, zc) + pairing(zb, zc));
    CHECK(pairing(za * -3, zc) == -3 * pairing(za, zc));
    CHECK(mod2_reduce(za + zb) == mod2_reduce(za) + mod2_reduce(zb));
    CHECK(mod2_reduce(lift(mod2_reduce(za))) == mod2_reduce(za));
  }
}

TEST_CASE("property: Wu consistency, exhaustive k <= 8") {
  for (int k = 0; k <= 8; ++k) {
    const auto x = RationalManifold::cp2_blowup(k);
    const auto kx = canonical_class(x);
    for (const auto& a : enumerate_mod2_classes(x, true)) {
      const auto z = lift(a);
      CHECK(oracle::mod4(square(z) - pairing(kx, z)) % 2 == 0);
      CHECK(w2_pairing(a) == oracle::mod4(pairing(kx, z)) % 2);
    }
  }
  const auto y = RationalManifold::s2xs2();
  for (const auto& a : enumerate_mod2_classes(y, true)) CHECK(w2_pairing(a) == 0);
}

TEST_CASE("diagonalized signatures and determinants") {
  // The form is already diagonal in the standard basis: count signs.
  for (int k = 0; k <= 10; ++k) {
    const auto x = RationalManifold::cp2_blowup(k);
    int pos = 0, neg = 0;
    for (int i = 0; i < x.b2(); ++i) (x.form(i, i) > 0 ? pos : neg)++;
    CHECK(pos == 1);
    CHECK(neg == k);
  }
  const auto y = RationalManifold::s2xs2();
  CHECK(y.form(0, 0) * y.form(1, 1) - y.form(0, 1) * y.form(1, 0) == -1);
}
