#pragma once

#include <string>

#include "lindlehmer/bigint.hpp"

namespace lindlehmer {

/// re + im * i in Z[i].
struct GaussianInteger {
  BigInt re = 0;
  BigInt im = 0;

  GaussianInteger() = default;
  GaussianInteger(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}

  /// re^2 + im^2.
  BigInt norm() const { return re * re + im * im; }
  GaussianInteger conj() const { return {re, -im}; }
  bool is_unit() const { return norm() == 1; }

  GaussianInteger operator+(const GaussianInteger& o) const { return {re + o.re, im + o.im}; }
  GaussianInteger operator-(const GaussianInteger& o) const { return {re - o.re, im - o.im}; }
  GaussianInteger operator-() const { return {-re, -im}; }
  GaussianInteger operator*(const GaussianInteger& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }

  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// "3+4i", "-i", "0".
  std::string to_string() const;
};

}  // namespace lindlehmer
