#pragma once

#include <cstddef>
#include <vector>

#include "lindlehmer/bigint.hpp"

namespace lindlehmer {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free Gaussian elimination with row pivoting.
BigInt bareiss_determinant(Matrix<BigInt> m);

/// Determinant modulo enough 62-bit primes to exceed twice the Hadamard bound,
/// reconstructed by the Chinese remainder theorem.
BigInt modular_determinant(const Matrix<BigInt>& m);

/// Division-free determinant over any commutative ring (Berkowitz).
///
/// Ring needs copy, +, -, * and unary -. `one` is the multiplicative identity.
/// Uses O(n^4) ring multiplications and commutes with ring homomorphisms.
template <class Ring>
Ring berkowitz_determinant(const Matrix<Ring>& a, const Ring& one) {
  const std::size_t n = a.rows();
  if (n == 0) return one;
  // Coefficients of det(t I - A_r) for the leading r x r block, highest power first.
  std::vector<Ring> charpoly{one, -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S.
    std::vector<Ring> toeplitz;
    toeplitz.reserve(r + 2);
    toeplitz.push_back(one);
    toeplitz.push_back(-a(r, r));
    std::vector<Ring> v;
    v.reserve(r);
    for (std::size_t i = 0; i < r; ++i) v.push_back(a(i, r));
    for (std::size_t step = 0; step < r; ++step) {
      if (step != 0) {
        std::vector<Ring> next;
        next.reserve(r);
        for (std::size_t i = 0; i < r; ++i) {
          Ring acc = a(i, 0) * v[0];
          for (std::size_t j = 1; j < r; ++j) acc = acc + a(i, j) * v[j];
          next.push_back(std::move(acc));
        }
        v = std::move(next);
      }
      Ring dot = a(r, 0) * v[0];
      for (std::size_t j = 1; j < r; ++j) dot = dot + a(r, j) * v[j];
      toeplitz.push_back(-dot);
    }
    std::vector<Ring> next;
    next.reserve(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      Ring acc = toeplitz[i] * charpoly[0];
      for (std::size_t j = 1; j <= i && j <= r; ++j) acc = acc + toeplitz[i - j] * charpoly[j];
      next.push_back(std::move(acc));
    }
    charpoly = std::move(next);
  }
  return n % 2 == 0 ? charpoly[n] : -charpoly[n];
}

}  // namespace lindlehmer
