#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "torus/integer.hpp"

namespace torus {

/// Dense row-major matrix of arbitrary-precision integers.  Zero rows are
/// allowed so that the empty basis of a rank-0 lattice is an ordinary value.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  std::vector<IntVector> row_list() const;
  void set_row(std::size_t i, const IntVector& v);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  IntMatrix transpose() const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
  Int max_abs() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct HermiteResult {
  IntMatrix h;  // row Hermite normal form, zero rows last
  IntMatrix u;  // unimodular, h = u * m
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: positive pivots, entries above each pivot
/// reduced into [0, pivot).
HermiteResult hnf(const IntMatrix& m);

struct SmithResult {
  IntMatrix u;
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., non-negative
  IntMatrix v;
  IntMatrix v_inv;
  std::vector<Int> invariant_factors;  // the nonzero diagonal entries
};

/// Smith normal form d = u * m * v with u, v unimodular.
SmithResult snf(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

/// gcd of all r x r minors; r = 0 gives 1, and 0 means every minor vanishes.
Int minors_gcd(const IntMatrix& m, std::size_t r);

/// Matrix rank over the rationals.
std::size_t rank_of(const IntMatrix& m);

}  // namespace torus
