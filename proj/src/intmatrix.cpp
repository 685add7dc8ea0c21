#include "lagsurf/intmatrix.hpp"

#include <limits>
#include <utility>

namespace lagsurf {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return 1;
  std::vector<__int128> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  auto at = [&](int i, int j) -> __int128& {
    return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = m(i, j);
  }

  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Exact division: the numerator is prev times a minor.
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        if (at(i, j) > kMax || at(i, j) < -kMax) throw std::overflow_error("determinant exceeds int64");
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return static_cast<std::int64_t>(sign * at(n - 1, n - 1));
}

IntMatrix block_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = a.dim();
  IntMatrix c(2 * n);
  for (int i = 0; i < n; ++i) {
    c(i, i) = 1;
    c(n + i, i) = 1;
    for (int j = 0; j < n; ++j) {
      c(i, n + j) = a(i, j);
      c(n + i, n + j) = b(i, j);
    }
  }
  return c;
}

BlockDetCheck block_det_identity(const IntMatrix& a, const IntMatrix& b) {
  return {determinant(block_matrix(a, b)), determinant(b - a)};
}

}  // namespace lagsurf
