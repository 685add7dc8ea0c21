#include "lagsurf/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace lagsurf {

namespace {

void require_same_ambient(const RationalManifold& a, const RationalManifold& b) {
  if (!(a == b)) {
    throw LatticeError("classes live in different manifolds: " + a.name() + " vs " + b.name());
  }
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool parse_int(std::string_view text, long long& value) {
  if (text.empty()) return false;
  auto first = text.data();
  auto last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

}  // namespace

// --- RationalManifold -------------------------------------------------------

RationalManifold RationalManifold::cp2_blowup(int k) {
  if (k < 0) throw LatticeError("number of blow-ups must be nonnegative");
  return RationalManifold(ManifoldKind::CP2BlowUp, k);
}

RationalManifold RationalManifold::s2xs2() { return RationalManifold(ManifoldKind::S2xS2, 0); }

int RationalManifold::form(int i, int j) const {
  if (i < 0 || j < 0 || i >= b2() || j >= b2()) throw LatticeError("basis index out of range");
  if (kind_ == ManifoldKind::S2xS2) return i == j ? 0 : 1;
  if (i != j) return 0;
  return i == 0 ? 1 : -1;
}

std::string RationalManifold::name() const {
  if (kind_ == ManifoldKind::S2xS2) return "s2xs2";
  return "cp2+" + std::to_string(k_);
}

RationalManifold parse_manifold(std::string_view text) {
  const std::string s = lowercase(strip_spaces(text));
  if (s == "s2xs2") return RationalManifold::s2xs2();
  if (s == "cp2") return RationalManifold::cp2_blowup(0);
  if (s.rfind("cp2+", 0) == 0) {
    long long k = 0;
    if (parse_int(std::string_view(s).substr(4), k) && k >= 0 && k <= 1'000'000) {
      return RationalManifold::cp2_blowup(static_cast<int>(k));
    }
  }
  throw LatticeError("unrecognized manifold '" + std::string(text) + "' (expected cp2+k or s2xs2)");
}

// --- IntegralClass ----------------------------------------------------------

IntegralClass::IntegralClass(RationalManifold ambient, std::vector<std::int64_t> coeffs)
    : ambient_(ambient), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ambient_.b2()) {
    throw LatticeError("coefficient vector has length " + std::to_string(coeffs_.size()) +
                       ", expected b2 = " + std::to_string(ambient_.b2()));
  }
}

IntegralClass IntegralClass::zero(RationalManifold ambient) {
  return IntegralClass(ambient, std::vector<std::int64_t>(static_cast<std::size_t>(ambient.b2()), 0));
}

IntegralClass IntegralClass::basis(RationalManifold ambient, int index) {
  auto z = zero(ambient);
  if (index < 0 || index >= ambient.b2()) throw LatticeError("basis index out of range");
  z.coeffs_[static_cast<std::size_t>(index)] = 1;
  return z;
}

IntegralClass IntegralClass::operator+(const IntegralClass& other) const {
  require_same_ambient(ambient_, other.ambient_);
  auto out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

IntegralClass IntegralClass::operator-(const IntegralClass& other) const {
  return *this + other * -1;
}

IntegralClass IntegralClass::operator*(std::int64_t scalar) const {
  auto out = *this;
  for (auto& c : out.coeffs_) c *= scalar;
  return out;
}

// --- Mod2Class --------------------------------------------------------------

Mod2Class::Mod2Class(RationalManifold ambient, std::vector<std::uint8_t> bits)
    : ambient_(ambient), bits_(std::move(bits)) {
  if (static_cast<int>(bits_.size()) != ambient_.b2()) {
    throw LatticeError("bit vector has length " + std::to_string(bits_.size()) +
                       ", expected b2 = " + std::to_string(ambient_.b2()));
  }
  for (auto& b : bits_) b &= 1U;
}

Mod2Class Mod2Class::zero(RationalManifold ambient) {
  return Mod2Class(ambient, std::vector<std::uint8_t>(static_cast<std::size_t>(ambient.b2()), 0));
}

Mod2Class Mod2Class::basis(RationalManifold ambient, int index) {
  auto a = zero(ambient);
  if (index < 0 || index >= ambient.b2()) throw LatticeError("basis index out of range");
  a.bits_[static_cast<std::size_t>(index)] = 1;
  return a;
}

Mod2Class Mod2Class::from_index(RationalManifold ambient, std::uint64_t index) {
  if (ambient.b2() > 63) throw LatticeError("b2 too large for index encoding");
  if (index >> ambient.b2()) throw LatticeError("class index out of range");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(ambient.b2()));
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = static_cast<std::uint8_t>((index >> j) & 1U);
  return Mod2Class(ambient, std::move(bits));
}

bool Mod2Class::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

int Mod2Class::popcount() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t Mod2Class::index() const {
  if (bits_.size() > 63) throw LatticeError("b2 too large for index encoding");
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < bits_.size(); ++j) out |= static_cast<std::uint64_t>(bits_[j]) << j;
  return out;
}

Mod2Class Mod2Class::operator+(const Mod2Class& other) const {
  require_same_ambient(ambient_, other.ambient_);
  auto out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] ^= other.bits_[i];
  return out;
}

// --- operations -------------------------------------------------------------

std::int64_t pairing(const IntegralClass& lhs, const IntegralClass& rhs) {
  require_same_ambient(lhs.ambient(), rhs.ambient());
  const auto& x = lhs.ambient();
  if (x.kind() == ManifoldKind::S2xS2) return lhs[0] * rhs[1] + lhs[1] * rhs[0];
  std::int64_t sum = lhs[0] * rhs[0];
  for (int i = 1; i < x.b2(); ++i) sum -= lhs[i] * rhs[i];
  return sum;
}

std::int64_t square(const IntegralClass& z) { return pairing(z, z); }

IntegralClass canonical_class(const RationalManifold& x) {
  if (x.kind() == ManifoldKind::S2xS2) return IntegralClass(x, {-2, -2});
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(x.b2()), 1);
  coeffs[0] = -3;
  return IntegralClass(x, std::move(coeffs));
}

Mod2Class mod2_reduce(const IntegralClass& z) {
  std::vector<std::uint8_t> bits(z.coeffs().size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] = static_cast<std::uint8_t>(z.coeffs()[i] & 1);  // two's complement: -1 & 1 == 1
  }
  return Mod2Class(z.ambient(), std::move(bits));
}

IntegralClass lift(const Mod2Class& a) {
  std::vector<std::int64_t> coeffs(a.bits().begin(), a.bits().end());
  return IntegralClass(a.ambient(), std::move(coeffs));
}

int w2_pairing(const Mod2Class& a) {
  return static_cast<int>(square(lift(a)) & 1);
}

OrbitSignature orbit_signature(const Mod2Class& a) {
  if (a.ambient().kind() == ManifoldKind::S2xS2) return ProductSignature{a[0] ? 1 : 0, a[1] ? 1 : 0};
  return BlowUpSignature{a[0] ? 1 : 0, a.popcount() - (a[0] ? 1 : 0)};
}

std::vector<Mod2Class> enumerate_mod2_classes(const RationalManifold& x, bool include_zero) {
  if (x.b2() > 40) throw LatticeError("refusing to enumerate 2^" + std::to_string(x.b2()) + " classes");
  const std::uint64_t count = std::uint64_t{1} << x.b2();
  std::vector<Mod2Class> out;
  out.reserve(count);
  for (std::uint64_t n = include_zero ? 0 : 1; n < count; ++n) out.push_back(Mod2Class::from_index(x, n));
  return out;
}

// --- text forms -------------------------------------------------------------

std::string to_string(const Mod2Class& a) {
  if (a.is_zero()) return "0";
  std::string out;
  auto append = [&out](const std::string& token) {
    if (!out.empty()) out += '+';
    out += token;
  };
  if (a.ambient().kind() == ManifoldKind::S2xS2) {
    if (a[0]) append("B");
    if (a[1]) append("F");
    return out;
  }
  if (a[0]) append("H");
  for (int i = 1; i < a.size(); ++i) {
    if (a[i]) append("E" + std::to_string(i));
  }
  return out;
}

std::string to_string(const IntegralClass& z) {
  std::string out = "(";
  for (int i = 0; i < z.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(z[i]);
  }
  return out + ")";
}

Mod2Class parse_mod2_class(const RationalManifold& x, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw LatticeError("empty class string");
  auto out = Mod2Class::zero(x);
  if (s == "0") return out;

  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find('+', pos);
    const std::string token = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (token.empty()) throw LatticeError("malformed class string '" + s + "'");

    int index = -1;
    if (x.kind() == ManifoldKind::S2xS2) {
      if (token == "B") index = 0;
      if (token == "F") index = 1;
    } else if (token == "H") {
      index = 0;
    } else if (token[0] == 'E') {
      long long i = 0;
      if (parse_int(std::string_view(token).substr(1), i) && i >= 1 && i <= x.blowups() &&
          std::isdigit(static_cast<unsigned char>(token[1]))) {
        index = static_cast<int>(i);
      }
    }
    if (index < 0) {
      throw LatticeError("unknown basis element '" + token + "' for " + x.name());
    }
    out = out + Mod2Class::basis(x, index);

    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

IntegralClass parse_integral_class(const RationalManifold& x, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw LatticeError("integral class must look like (c0,c1,...)");
  }
  std::vector<std::int64_t> coeffs;
  const std::string body = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t next = body.find(',', pos);
    long long v = 0;
    if (!parse_int(std::string_view(body).substr(pos, next == std::string::npos ? std::string::npos : next - pos), v)) {
      throw LatticeError("malformed coefficient in '" + s + "'");
    }
    coeffs.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return IntegralClass(x, std::move(coeffs));
}

}  // namespace lagsurf
