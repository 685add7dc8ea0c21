#pragma once

// Independent reference implementations for the tests. Nothing here calls
// into the library; forms, squares and determinants are rebuilt from their
// definitions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<std::vector<std::int64_t>>;

// Gram matrix: diag(1,-1,...,-1) for CP2 # k(-CP2), hyperbolic for S2 x S2.
inline Mat gram(bool product, int k) {
  if (product) return {{0, 1}, {1, 0}};
  Mat g(static_cast<std::size_t>(k + 1), Vec(static_cast<std::size_t>(k + 1), 0));
  g[0][0] = 1;
  for (int i = 1; i <= k; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
  return g;
}

inline std::int64_t form(const Mat& g, const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

inline int mod4(std::int64_t v) { return static_cast<int>(((v % 4) + 4) % 4); }
inline int rep4(std::int64_t v) {
  const int r = mod4(v);
  return r >= 2 ? r - 4 : r;
}

// P of a class given by its H bit a and m exceptional bits: a - m.
inline int blowup_p(int a, int m) { return rep4(a - m); }
// P(pB + qF) = 2pq.
inline int product_p(int p, int q) { return rep4(2 * p * q); }

// Z_t = tH - E1 - ... - E_{2t+1} - (t-1) E_{2t+2}, padded to k.
inline Vec zt(int t, int k) {
  Vec z(static_cast<std::size_t>(k + 1), 0);
  z[0] = t;
  for (int i = 1; i <= 2 * t + 1; ++i) z[static_cast<std::size_t>(i)] = -1;
  if (2 * t + 2 <= k) z[static_cast<std::size_t>(2 * t + 2)] = -(t - 1);
  return z;
}

// Leibniz expansion over all permutations.
inline std::int64_t leibniz(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    std::int64_t term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Euler number of N_c and of Sigma_g.
inline std::int64_t chi_nonorientable(int crosscaps) { return 2 - crosscaps; }
inline std::int64_t chi_orientable(int genus) { return 2 - 2 * genus; }

}  // namespace oracle
