#include "torus/lattice.hpp"

#include <cmath>
#include <utility>

#include "torus/error.hpp"

namespace torus {

Lattice Lattice::span(std::size_t ambient, const std::vector<IntVector>& generators) {
  return row_span(IntMatrix::from_rows(generators, ambient));
}

Lattice Lattice::row_span(const IntMatrix& m) {
  const HermiteResult h = hnf(m);
  Lattice l(m.cols());
  std::vector<std::size_t> keep(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) keep[i] = i;
  l.basis_ = h.h.select_rows(keep);
  return l;
}

Lattice Lattice::full(std::size_t ambient) { return row_span(IntMatrix::identity(ambient)); }

double GramDet::covolume() const { return std::exp(0.5 * log_abs(value)); }

GramDet gram_det(const std::vector<IntVector>& basis) {
  const std::size_t r = basis.size();
  IntMatrix g(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) g(i, j) = g(j, i) = dot(basis[i], basis[j]);
  return GramDet{determinant(g)};
}

GramDet gram_det(const Lattice& l) { return gram_det(l.basis_vectors()); }

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  // basis = u^-1 * d * v^-1 with d = [diag | 0]; the first r rows of v^-1 span Q*L
  // and, being rows of a unimodular matrix, span a primitive lattice.
  const SmithResult s = snf(l.basis());
  std::vector<std::size_t> first(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) first[i] = i;
  return Lattice::row_span(s.v_inv.select_rows(first));
}

bool is_primitive(const Lattice& l) { return minors_gcd(l.basis(), l.rank()) == 1; }

Lattice orthogonal(const Lattice& l) {
  const std::size_t n = l.ambient();
  if (l.rank() == 0) return Lattice::full(n);
  // left kernel of B^T: the rows of u that hnf sends to zero
  const HermiteResult h = hnf(l.basis().transpose());
  std::vector<std::size_t> kernel_rows;
  for (std::size_t i = h.rank; i < n; ++i) kernel_rows.push_back(i);
  return Lattice::row_span(h.u.select_rows(kernel_rows));
}

std::optional<IntVector> member_coords(const Lattice& l, const IntVector& v) {
  if (v.size() != l.ambient()) throw DomainError("vector dimension does not match lattice");
  const IntMatrix& b = l.basis();
  IntVector residual = v;
  IntVector coords(l.rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    while (b(i, col) == 0) {
      if (residual[col] != 0) return std::nullopt;
      ++col;
    }
    if (!mpz_divisible_p(residual[col].get_mpz_t(), b(i, col).get_mpz_t())) return std::nullopt;
    coords[i] = residual[col] / b(i, col);
    for (std::size_t j = col; j < l.ambient(); ++j) residual[j] -= coords[i] * b(i, j);
    ++col;
  }
  for (const auto& x : residual)
    if (x != 0) return std::nullopt;
  return coords;
}

bool contains(const Lattice& l, const IntVector& v) { return member_coords(l, v).has_value(); }

bool is_sublattice(const Lattice& sub, const Lattice& super) {
  if (sub.ambient() != super.ambient()) return false;
  for (const auto& b : sub.basis_vectors())
    if (!contains(super, b)) return false;
  return true;
}

double norm(const IntVector& v) { return std::exp(0.5 * log_abs(dot(v, v))); }

namespace {

struct GramSchmidt {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> bnorm;  // ||b*_i||^2
};

GramSchmidt gram_schmidt(const std::vector<IntVector>& b) {
  const std::size_t m = b.size();
  const std::size_t n = m ? b[0].size() : 0;
  GramSchmidt gs{std::vector<std::vector<Rat>>(m, std::vector<Rat>(m)), std::vector<Rat>(m)};
  std::vector<std::vector<Rat>> star(m, std::vector<Rat>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) star[i][k] = b[i][k];
    for (std::size_t j = 0; j < i; ++j) {
      Rat num = 0;
      for (std::size_t k = 0; k < n; ++k) num += Rat(b[i][k]) * star[j][k];
      gs.mu[i][j] = num / gs.bnorm[j];
      for (std::size_t k = 0; k < n; ++k) star[i][k] -= gs.mu[i][j] * star[j][k];
    }
    Rat s = 0;
    for (std::size_t k = 0; k < n; ++k) s += star[i][k] * star[i][k];
    if (s == 0) throw DomainError("lll_reduce: basis vectors are linearly dependent");
    gs.bnorm[i] = s;
  }
  return gs;
}

void size_reduce(std::vector<IntVector>& b, GramSchmidt& gs, std::size_t k, std::size_t j) {
  const Int q = round_nearest(gs.mu[k][j]);
  if (q == 0) return;
  for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
  for (std::size_t t = 0; t < j; ++t) gs.mu[k][t] -= Rat(q) * gs.mu[j][t];
  gs.mu[k][j] -= Rat(q);
}

}  // namespace

void lll_reduce(std::vector<IntVector>& b) {
  const std::size_t m = b.size();
  if (m <= 1) return;
  const Rat delta(99, 100);
  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  while (k < m) {
    size_reduce(b, gs, k, k - 1);
    if (gs.bnorm[k] < (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.bnorm[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gs = gram_schmidt(b);
      k = (k > 1) ? k - 1 : 1;
    } else {
      for (std::size_t j = k - 1; j-- > 0;) size_reduce(b, gs, k, j);
      ++k;
    }
  }
}

double product_ratio(const std::vector<IntVector>& basis) {
  double log_prod = 0.0;
  for (const auto& v : basis) log_prod += 0.5 * log_abs(dot(v, v));
  return std::exp(log_prod - 0.5 * log_abs(gram_det(basis).value));
}

ReducedBasis reduced_basis(const Lattice& l) {
  if (l.rank() == 0) throw DomainError("reduced_basis requires rank >= 1");
  ReducedBasis out{l.basis_vectors(), 1.0};
  lll_reduce(out.basis);
  out.product_ratio = product_ratio(out.basis);
  return out;
}

std::optional<std::vector<Rat>> rational_coords(const std::vector<IntVector>& basis,
                                                const IntVector& x) {
  // Solve (B B^T) lambda = B x, then confirm lambda^T B = x.
  const std::size_t r = basis.size();
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = dot(basis[i], basis[j]);
    a[i][r] = dot(basis[i], x);
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (p < r && a[p][c] == 0) ++p;
    if (p == r) throw DomainError("rational_coords: dependent basis");
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rat> lambda(r);
  for (std::size_t i = 0; i < r; ++i) lambda[i] = a[i][r] / a[i][i];
  for (std::size_t k = 0; k < x.size(); ++k) {
    Rat s = 0;
    for (std::size_t i = 0; i < r; ++i) s += lambda[i] * Rat(basis[i][k]);
    if (s != Rat(x[k])) return std::nullopt;
  }
  return lambda;
}

double coefficient_ratio(const std::vector<IntVector>& basis, const IntVector& x) {
  const auto lambda = rational_coords(basis, x);
  if (!lambda) throw DomainError("coefficient_ratio: vector not in the span of the basis");
  const double xn = norm(x);
  if (xn == 0.0) throw DomainError("coefficient_ratio: zero vector");
  double worst = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const double lj = std::fabs((*lambda)[j].get_d());
    worst = std::max(worst, lj * norm(basis[j]) / xn);
  }
  return worst;
}

}  // namespace torus
