#ifndef CFHANKEL_MATRIX_HPP
#define CFHANKEL_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace cfhankel {

// Dense square matrix over any commutative-ring element type that supports
// +, -, *, is_zero(), and an exact_div(n, d) static on T.
template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n, const T& fill = T()) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

// Bareiss one-step fraction-free elimination.  Every division is exact in the
// coefficient ring, so the result is the exact determinant with no fractions
// introduced along the way.
template <class T>
T det_fraction_free(SquareMatrix<T> m, const T& one_value) {
  const std::size_t n = m.size();
  if (n == 0) return one_value;
  int sign = 1;
  T prev = one_value;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return one_value - one_value;  // zero column below the pivot: singular
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = T::exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      m(i, k) = T();
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

inline Scalar det(const SquareMatrix<Scalar>& m, const Ring& ring) {
  return det_fraction_free(m, Scalar::one(ring));
}

// Cofactor expansion along the first row.  Exponential; meant for small
// orders and for element types without exact division (e.g. polynomials in a
// distinguished variable).
template <class T>
T laplace_det(const SquareMatrix<T>& m, const T& one_value) {
  const std::size_t n = m.size();
  if (n == 0) return one_value;
  if (n == 1) return m(0, 0);
  T acc = one_value - one_value;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    SquareMatrix<T> minor(n - 1, one_value - one_value);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    T term = m(0, j) * laplace_det(minor, one_value);
    if (j % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

}  // namespace cfhankel

#endif
