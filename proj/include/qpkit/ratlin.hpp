#pragma once

#include <vector>

#include "qpkit/rational.hpp"

namespace qpkit {

// Dense matrix of exact rationals, row-major. Immutable use after
// construction is the norm; operations below are pure functions.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::vector<int> pivots;  // pivot columns, increasing
};

// Unique reduced row echelon form. Fraction-free (Bareiss) forward
// elimination on integer-scaled rows, first-nonzero pivoting in column
// order, then rational back-substitution; bit-for-bit reproducible.
RrefResult rref(const RationalMatrix& m);

int rank(const RationalMatrix& m);

// Basis of {v : M v = 0}; size is cols - rank, each vector exact.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

inline int nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

}  // namespace qpkit
