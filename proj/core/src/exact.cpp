#include "lvmb/exact.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "lvmb/error.hpp"

namespace lvmb {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::domain, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Rational GaussianRational::norm() const { return Rational(re_ * re_ + im_ * im_); }

GaussianRational GaussianRational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::singular, "division by zero");
  const Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw Error(ErrorCode::singular, "division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.reciprocal();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string s = re_.get_str();
  s += sgn(im_) < 0 ? "-" : "+";
  s += Rational(abs(im_)).get_str() + "i";
  return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::domain, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::span<const ExactVector> rows, std::size_t cols) {
  ExactMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

ExactVector ExactMatrix::col(std::size_t c) const {
  ExactVector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void ExactMatrix::append_row(const ExactVector& row) {
  if (row.size() != cols_) throw Error(ErrorCode::domain, "row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> columns) const {
  ExactMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  return out;
}

ExactMatrix ExactMatrix::select_rows(std::span<const std::size_t> rows) const {
  ExactMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(rows[i], c);
  return out;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& below) const {
  if (below.cols_ != cols_) throw Error(ErrorCode::domain, "column count mismatch in stack");
  ExactMatrix out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::domain, "shape mismatch in product");
  ExactMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::domain, "shape mismatch in product");
  ExactVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

struct GaussianInteger {
  Integer re;
  Integer im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussianInteger mul(const GaussianInteger& a, const GaussianInteger& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInteger sub(const GaussianInteger& a, const GaussianInteger& b) {
  return {a.re - b.re, a.im - b.im};
}

// Division known to be exact in Z[i] (Sylvester's identity guarantees it in Bareiss steps).
GaussianInteger divexact(const GaussianInteger& a, const GaussianInteger& b) {
  if (sgn(b.im) == 0) {
    GaussianInteger q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  const GaussianInteger num = mul(a, {b.re, -b.im});
  const Integer den = b.re * b.re + b.im * b.im;
  GaussianInteger q;
  mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), den.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), den.get_mpz_t());
  return q;
}

struct IntegerForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<GaussianInteger> data;
  // Product of the per-row scale factors.
  Integer scale{1};

  GaussianInteger& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

// Scales each row by the lcm of its denominators, which preserves rank and
// multiplies the determinant by the recorded scale.
IntegerForm to_integer_form(const ExactMatrix& m) {
  IntegerForm f;
  f.rows = m.rows();
  f.cols = m.cols();
  f.data.resize(f.rows * f.cols);
  for (std::size_t r = 0; r < f.rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < f.cols; ++c) {
      const auto& z = m(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < f.cols; ++c) {
      const auto& z = m(r, c);
      f.at(r, c) = {l / z.re().get_den() * z.re().get_num(), l / z.im().get_den() * z.im().get_num()};
    }
    f.scale *= l;
  }
  return f;
}

struct BareissResult {
  std::size_t rank = 0;
  bool odd_swaps = false;
  GaussianInteger last_pivot{Integer(1), Integer(0)};
};

BareissResult bareiss_echelon(IntegerForm& f) {
  BareissResult res;
  GaussianInteger prev{Integer(1), Integer(0)};
  std::size_t r = 0;
  for (std::size_t c = 0; c < f.cols && r < f.rows; ++c) {
    std::size_t p = r;
    while (p < f.rows && f.at(p, c).is_zero()) ++p;
    if (p == f.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < f.cols; ++j) std::swap(f.at(p, j), f.at(r, j));
      res.odd_swaps = !res.odd_swaps;
    }
    const GaussianInteger pivot = f.at(r, c);
    for (std::size_t i = r + 1; i < f.rows; ++i) {
      const GaussianInteger lead = f.at(i, c);
      for (std::size_t j = c + 1; j < f.cols; ++j) {
        f.at(i, j) = divexact(sub(mul(pivot, f.at(i, j)), mul(lead, f.at(r, j))), prev);
      }
      f.at(i, c) = {};
    }
    prev = pivot;
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

// Reduced row echelon form over Q(i); returns pivot columns.
std::vector<std::size_t> rref(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const GaussianRational inv = m(r, c).reciprocal();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const GaussianRational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  if (m.empty()) return 0;
  IntegerForm f = to_integer_form(m);
  return bareiss_echelon(f).rank;
}

GaussianRational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::domain, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerForm f = to_integer_form(m);
  const BareissResult res = bareiss_echelon(f);
  if (res.rank < m.rows()) return 0;
  // The last Bareiss pivot is the determinant of the row-scaled, row-permuted matrix.
  GaussianRational det(Rational(res.last_pivot.re), Rational(res.last_pivot.im));
  det /= GaussianRational(Rational(f.scale));
  return res.odd_swaps ? -det : det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::domain, "inverse of non-square matrix");
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::singular, "matrix is singular");
  }
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  ExactMatrix reduced = m;
  const auto pivots = rref(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lvmb
