#pragma once

#include <cstddef>
#include <vector>

#include "equicat/rational.hpp"

namespace equicat {

/// Dense matrix of exact rationals. Used for fixed-subspace dimension
/// oracles; never on a hot path.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(size_t r, size_t c) const {
    return entries_[r * cols_ + c];
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  RatMatrix scaled(const Rational& s) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Rank by exact Gaussian elimination over the rationals.
  size_t rank() const;

  /// Sum of diagonal entries.
  Rational trace() const;

 private:
  size_t rows_, cols_;
  std::vector<Rational> entries_;
};

}  // namespace equicat
