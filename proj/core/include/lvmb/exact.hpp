#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace lvmb {

/// Arbitrary-precision rational; GMP keeps results of arithmetic in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in lowest terms with a positive denominator. Throws DomainError on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = Rational(0));

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm() const;
  /// Throws Singular on zero.
  GaussianRational reciprocal() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using ExactVector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  /// Each row must have exactly `cols` entries.
  static ExactMatrix from_rows(std::span<const ExactVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactVector row(std::size_t r) const;
  ExactVector col(std::size_t c) const;
  void append_row(const ExactVector& row);

  ExactMatrix transpose() const;
  ExactMatrix select_columns(std::span<const std::size_t> columns) const;
  ExactMatrix select_rows(std::span<const std::size_t> rows) const;
  /// Rows of *this followed by rows of below; column counts must agree.
  ExactMatrix stacked(const ExactMatrix& below) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactVector operator*(const ExactMatrix& a, const ExactVector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Exact rank by fraction-free elimination over the Gaussian integers.
std::size_t rank(const ExactMatrix& m);

/// Exact determinant of a square matrix, fraction-free. Throws DomainError if not square.
GaussianRational determinant(const ExactMatrix& m);

/// Exact inverse. Throws DomainError if not square, Singular if rank < size.
ExactMatrix inverse(const ExactMatrix& m);

/// Basis of the right kernel; size is cols - rank.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

}  // namespace lvmb
