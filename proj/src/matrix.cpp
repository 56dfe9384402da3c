#include "equicat/matrix.hpp"

#include "equicat/error.hpp"

namespace equicat {

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimMismatch, "RatMatrix: shape mismatch in +");
  RatMatrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.entries_.size(); ++i)
    r.entries_[i] = a.entries_[i] + b.entries_[i];
  return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::DimMismatch, "RatMatrix: shape mismatch in *");
  RatMatrix r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * s;
  return r;
}

size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  size_t rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t pivot = row;
    while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (size_t j = 0; j < cols_; ++j) std::swap(m(row, j), m(pivot, j));
    Rational inv = Rational(1) / m(row, col);
    for (size_t j = col; j < cols_; ++j) m(row, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (size_t j = col; j < cols_; ++j) m(i, j) -= f * m(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

Rational RatMatrix::trace() const {
  Rational t;
  for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

}  // namespace equicat
