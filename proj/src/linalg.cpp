#include "lindlehmer/linalg.hpp"

#include <cmath>
#include <cstdint>

namespace lindlehmer {

BigInt bareiss_determinant(Matrix<BigInt> m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 det_mod_prime(const Matrix<BigInt>& src, u64 p) {
  const std::size_t n = src.rows();
  std::vector<u64> a(n * n);
  BigInt bp = from_u64(p);
  BigInt r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpz_fdiv_r(r.get_mpz_t(), src(i, j).get_mpz_t(), bp.get_mpz_t());
      a[i * n + j] = mpz_get_ui(r.get_mpz_t());
    }
  }
  u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[pivot * n + c]);
      det = p - det;
      if (det == p) det = 0;
    }
    u64 pv = a[k * n + k];
    det = mulmod(det, pv, p);
    u64 inv = powmod(pv, p - 2, p);
    for (std::size_t i = k + 1; i < n; ++i) {
      u64 f = mulmod(a[i * n + k], inv, p);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) {
        u64 sub = mulmod(f, a[k * n + j], p);
        u64& x = a[i * n + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
  }
  return det;
}

}  // namespace

BigInt modular_determinant(const Matrix<BigInt>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // log2 of the Hadamard bound, rounded up generously.
  double bound_bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt sq = 0;
    for (std::size_t j = 0; j < n; ++j) sq += m(i, j) * m(i, j);
    if (sgn(sq) == 0) return 0;
    bound_bits += 0.5 * static_cast<double>(mpz_sizeinbase(sq.get_mpz_t(), 2));
  }
  const double needed_bits = bound_bits + 2.0;

  BigInt modulus = 1;
  BigInt residue = 0;
  BigInt candidate = BigInt(1) << 62;
  double have_bits = 0;
  while (have_bits < needed_bits) {
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    u64 p = mpz_get_ui(candidate.get_mpz_t());
    u64 d = det_mod_prime(m, p);
    // residue' = residue + modulus * ((d - residue) * modulus^{-1} mod p)
    BigInt bp = from_u64(p);
    BigInt diff = from_u64(d) - residue;
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), bp.get_mpz_t());
    BigInt t = mod_floor(diff * inv, bp);
    residue += modulus * t;
    modulus *= bp;
    have_bits += 61.9;
  }
  if (residue > modulus / 2) residue -= modulus;
  return residue;
}

}  // namespace lindlehmer
