#include "torus/matrix.hpp"

#include <algorithm>
#include <utility>

#include "torus/error.hpp"

namespace torus {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("row length does not match column count");
    m.set_row(i, rows[i]);
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<long>(i * cols_),
                   data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::set_row(std::size_t i, const IntVector& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
  return out;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  IntMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

Int IntMatrix::max_abs() const { return torus::max_abs(data_); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

namespace {

// Rows (i, k) <- [[s, t], [-b/g, a/g]] * rows (i, k); determinant 1.
void combine_rows(IntMatrix& m, std::size_t i, std::size_t k, const Int& s, const Int& t,
                  const Int& x, const Int& y) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int ri = m(i, j);
    Int rk = m(k, j);
    m(i, j) = s * ri + t * rk;
    m(k, j) = x * ri + y * rk;
  }
}

void combine_cols(IntMatrix& m, std::size_t i, std::size_t k, const Int& s, const Int& t,
                  const Int& x, const Int& y) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int ci = m(r, i);
    Int ck = m(r, k);
    m(r, i) = s * ci + t * ck;
    m(r, k) = x * ci + y * ck;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

HermiteResult hnf(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
    for (std::size_t k = pivot_row + 1; k < h.rows(); ++k) {
      if (h(k, c) == 0) continue;
      const Int a = h(pivot_row, c);
      const Int b = h(k, c);
      Int s, t;
      const Int g = ext_gcd(a, b, s, t);
      const Int x = -b / g;
      const Int y = a / g;
      combine_rows(h, pivot_row, k, s, t, x, y);
      combine_rows(u, pivot_row, k, s, t, x, y);
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    const Int p = h(pivot_row, c);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const Int q = floor_div(h(i, c), p);
      if (q != 0) {
        add_row_multiple(h, i, pivot_row, -q);
        add_row_multiple(u, i, pivot_row, -q);
      }
    }
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

SmithResult snf(const IntMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  SmithResult res{IntMatrix::identity(R), m, IntMatrix::identity(C), IntMatrix::identity(C), {}};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  IntMatrix& vi = res.v_inv;

  // Column op on d and v: cols (i,k) <- (s*ci + t*ck, x*ci + y*ck).  The inverse
  // acts on rows of v_inv: rows (i,k) <- [[y, -t], [-x, s]] * rows (i,k).
  auto col_op = [&](std::size_t i, std::size_t k, const Int& s, const Int& t, const Int& x,
                    const Int& y) {
    combine_cols(d, i, k, s, t, x, y);
    combine_cols(v, i, k, s, t, x, y);
    combine_rows(vi, i, k, y, -x, -t, s);
  };
  auto row_op = [&](std::size_t i, std::size_t k, const Int& s, const Int& t, const Int& x,
                    const Int& y) {
    combine_rows(d, i, k, s, t, x, y);
    combine_rows(u, i, k, s, t, x, y);
  };

  const std::size_t lim = std::min(R, C);
  for (std::size_t p = 0; p < lim; ++p) {
    // choose the nonzero entry of least magnitude in the trailing block
    std::size_t bi = R, bj = C;
    for (std::size_t i = p; i < R; ++i)
      for (std::size_t j = p; j < C; ++j)
        if (d(i, j) != 0 && (bi == R || abs(d(i, j)) < abs(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == R) break;
    if (bi != p) {
      d.swap_rows(p, bi);
      u.swap_rows(p, bi);
    }
    if (bj != p) {
      d.swap_cols(p, bj);
      v.swap_cols(p, bj);
      vi.swap_rows(p, bj);
    }
    for (;;) {
      bool changed = false;
      for (std::size_t k = p + 1; k < R; ++k) {
        if (d(k, p) == 0) continue;
        const Int a = d(p, p);
        const Int b = d(k, p);
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
          row_op(p, k, Int(1), Int(0), -b / a, Int(1));
        } else {
          Int s, t;
          const Int g = ext_gcd(a, b, s, t);
          row_op(p, k, s, t, -b / g, a / g);
        }
        changed = true;
      }
      for (std::size_t k = p + 1; k < C; ++k) {
        if (d(p, k) == 0) continue;
        const Int a = d(p, p);
        const Int b = d(p, k);
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
          col_op(p, k, Int(1), Int(0), -b / a, Int(1));
        } else {
          Int s, t;
          const Int g = ext_gcd(a, b, s, t);
          col_op(p, k, s, t, -b / g, a / g);
        }
        changed = true;
      }
      if (changed) continue;
      // divisibility: the pivot must divide the whole trailing block
      std::size_t bad = R;
      for (std::size_t i = p + 1; i < R && bad == R; ++i)
        for (std::size_t j = p + 1; j < C; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(p, p).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == R) break;
      add_row_multiple(d, p, bad, Int(1));
      add_row_multiple(u, p, bad, Int(1));
    }
    if (d(p, p) < 0) {
      negate_row(d, p);
      negate_row(u, p);
    }
  }
  for (std::size_t i = 0; i < lim; ++i)
    if (d(i, i) != 0) res.invariant_factors.push_back(d(i, i));
  return res;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t sw = k + 1;
      while (sw < n && a(sw, k) == 0) ++sw;
      if (sw == n) return 0;
      a.swap_rows(k, sw);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Int minors_gcd(const IntMatrix& m, std::size_t r) {
  if (r > std::min(m.rows(), m.cols()))
    throw DomainError("minor size " + std::to_string(r) + " exceeds matrix dimensions");
  if (r == 0) return 1;
  Int g = 0;
  std::vector<std::size_t> rows(r), cols(r);
  for (std::size_t i = 0; i < r; ++i) rows[i] = i;
  do {
    const IntMatrix sub = m.select_rows(rows);
    for (std::size_t i = 0; i < r; ++i) cols[i] = i;
    do {
      g = gcd(g, determinant(sub.select_cols(cols)));
      if (g == 1) return g;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return g;
}

std::size_t rank_of(const IntMatrix& m) { return hnf(m).rank; }

}  // namespace torus
