#pragma once

// Small dense integer matrices with exact determinants.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lagsurf {

class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
  }
  static IntMatrix identity(int n);

  int dim() const { return n_; }
  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }

  IntMatrix operator-(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  int n_;
  std::vector<std::int64_t> data_;
};

// Fraction-free Gaussian elimination (Bareiss). Throws std::overflow_error if
// an intermediate minor leaves the int64 range.
std::int64_t determinant(const IntMatrix& m);

// [[I, A], [I, B]].
IntMatrix block_matrix(const IntMatrix& a, const IntMatrix& b);

struct BlockDetCheck {
  std::int64_t block_det;
  std::int64_t difference_det;
  bool holds() const { return block_det == difference_det; }
};

// det([[I, A], [I, B]]) against det(B - A), both computed exactly.
BlockDetCheck block_det_identity(const IntMatrix& a, const IntMatrix& b);

}  // namespace lagsurf
