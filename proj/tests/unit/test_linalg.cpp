#include <doctest.h>

#include "lindlehmer/gaussian.hpp"
#include "lindlehmer/linalg.hpp"
#include "lindlehmer/random.hpp"

using namespace lindlehmer;

namespace {

Matrix<BigInt> random_matrix(Rng& rng, std::size_t n, long bound) {
  Matrix<BigInt> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-bound, bound);
  }
  return m;
}

// Cofactor expansion along the first row.
BigInt laplace(const Matrix<BigInt>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<BigInt> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j != c) minor(i - 1, jj++) = m(i, j);
      }
    }
    BigInt term = m(0, c) * laplace(minor);
    total += c % 2 ? -term : term;
  }
  return total;
}

}  // namespace

TEST_CASE("small determinants") {
  Matrix<BigInt> m(2, 2);
  m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 3; m(1, 1) = 4;
  CHECK(bareiss_determinant(m) == -2);
  CHECK(modular_determinant(m) == -2);
  CHECK(berkowitz_determinant(m, BigInt(1)) == -2);

  Matrix<BigInt> zero_pivot(3, 3);
  zero_pivot(0, 1) = 1; zero_pivot(1, 0) = 1; zero_pivot(2, 2) = 5;
  CHECK(bareiss_determinant(zero_pivot) == -5);
  CHECK(berkowitz_determinant(zero_pivot, BigInt(1)) == -5);

  Matrix<BigInt> singular(3, 3, BigInt(2));
  CHECK(bareiss_determinant(singular) == 0);
  CHECK(modular_determinant(singular) == 0);
}

TEST_CASE("three determinant algorithms agree with cofactor expansion") {
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.below(6);
    auto m = random_matrix(rng, n, 9);
    const BigInt want = laplace(m);
    CHECK(bareiss_determinant(m) == want);
    CHECK(modular_determinant(m) == want);
    CHECK(berkowitz_determinant(m, BigInt(1)) == want);
  }
}

TEST_CASE("modular determinant with large entries and size") {
  Rng rng(4);
  for (int t = 0; t < 5; ++t) {
    auto m = random_matrix(rng, 30, 1000000000L);
    m(3, 7) *= BigInt("123456789012345678901234567890");
    CHECK(modular_determinant(m) == bareiss_determinant(m));
  }
}

TEST_CASE("berkowitz over the Gaussian integers") {
  Matrix<GaussianInteger> m(2, 2);
  m(0, 0) = GaussianInteger(1, 1);
  m(0, 1) = GaussianInteger(2);
  m(1, 0) = GaussianInteger(0, 1);
  m(1, 1) = GaussianInteger(3, -1);
  // (1+i)(3-i) - 2i = 4 + 2i - 2i = 4.
  CHECK(berkowitz_determinant(m, GaussianInteger(1)) == GaussianInteger(4));
}
