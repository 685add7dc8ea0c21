#pragma once

// Integral and mod-2 second homology of rational 4-manifolds.
//
// Basis order is fixed: (H, E1, ..., Ek) for CP2 # k(-CP2) and (B, F) for
// S2 x S2. Every coefficient vector in the library uses this order so that
// certificates replay bit-exactly.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lagsurf {

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ManifoldKind { CP2BlowUp, S2xS2 };

class RationalManifold {
 public:
  static RationalManifold cp2_blowup(int k);
  static RationalManifold s2xs2();

  ManifoldKind kind() const { return kind_; }
  bool is_blowup() const { return kind_ == ManifoldKind::CP2BlowUp; }
  // Number of exceptional classes; zero for S2 x S2.
  int blowups() const { return k_; }
  int b2() const { return kind_ == ManifoldKind::S2xS2 ? 2 : k_ + 1; }

  // Entry (i, j) of the intersection form in the standard basis.
  int form(int i, int j) const;

  // Short name used by the CLI: "cp2+k" or "s2xs2".
  std::string name() const;

  friend bool operator==(const RationalManifold&, const RationalManifold&) = default;

 private:
  RationalManifold(ManifoldKind kind, int k) : kind_(kind), k_(k) {}
  ManifoldKind kind_;
  int k_;
};

// Accepts "cp2", "cp2+k" and "s2xs2" (case-insensitive).
RationalManifold parse_manifold(std::string_view text);

class IntegralClass {
 public:
  IntegralClass(RationalManifold ambient, std::vector<std::int64_t> coeffs);
  static IntegralClass zero(RationalManifold ambient);
  static IntegralClass basis(RationalManifold ambient, int index);

  const RationalManifold& ambient() const { return ambient_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  IntegralClass operator+(const IntegralClass& other) const;
  IntegralClass operator-(const IntegralClass& other) const;
  IntegralClass operator*(std::int64_t scalar) const;

  friend bool operator==(const IntegralClass&, const IntegralClass&) = default;

 private:
  RationalManifold ambient_;
  std::vector<std::int64_t> coeffs_;
};

class Mod2Class {
 public:
  Mod2Class(RationalManifold ambient, std::vector<std::uint8_t> bits);
  static Mod2Class zero(RationalManifold ambient);
  static Mod2Class basis(RationalManifold ambient, int index);
  // Bit j of `index` is the coefficient of basis element j.
  static Mod2Class from_index(RationalManifold ambient, std::uint64_t index);

  const RationalManifold& ambient() const { return ambient_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  bool operator[](int i) const { return bits_[static_cast<std::size_t>(i)] != 0; }
  int size() const { return static_cast<int>(bits_.size()); }
  bool is_zero() const;
  int popcount() const;
  std::uint64_t index() const;

  Mod2Class operator+(const Mod2Class& other) const;

  friend bool operator==(const Mod2Class&, const Mod2Class&) = default;

 private:
  RationalManifold ambient_;
  std::vector<std::uint8_t> bits_;
};

// (a, m): H coefficient and number of exceptional bits set.
struct BlowUpSignature {
  int a;
  int m;
  friend bool operator==(const BlowUpSignature&, const BlowUpSignature&) = default;
};

// (p, q): B and F coefficients.
struct ProductSignature {
  int p;
  int q;
  friend bool operator==(const ProductSignature&, const ProductSignature&) = default;
};

// Two classes in the same manifold share a signature iff a permutation of
// exceptional indices carries one to the other.
using OrbitSignature = std::variant<BlowUpSignature, ProductSignature>;

std::int64_t pairing(const IntegralClass& lhs, const IntegralClass& rhs);
std::int64_t square(const IntegralClass& z);
IntegralClass canonical_class(const RationalManifold& x);
Mod2Class mod2_reduce(const IntegralClass& z);
// Canonical 0/1 lift.
IntegralClass lift(const Mod2Class& a);
// <w2, A>, computed as A.A mod 2.
int w2_pairing(const Mod2Class& a);
OrbitSignature orbit_signature(const Mod2Class& a);
std::vector<Mod2Class> enumerate_mod2_classes(const RationalManifold& x, bool include_zero);

// Compact text forms: "H+E1+E3", "B+F", "0" and "(2,-1,-1)".
std::string to_string(const Mod2Class& a);
std::string to_string(const IntegralClass& z);
Mod2Class parse_mod2_class(const RationalManifold& x, std::string_view text);
IntegralClass parse_integral_class(const RationalManifold& x, std::string_view text);

}  // namespace lagsurf
