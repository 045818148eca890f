#include "torus/subgroup.hpp"

#include <algorithm>

#include "torus/error.hpp"

namespace torus {

AlgebraicSubgroup::AlgebraicSubgroup(Lattice l) : lattice_(std::move(l)) {
  if (lattice_.rank() == 0) return;
  const SmithResult s = snf(lattice_.basis());
  for (const auto& f : s.invariant_factors) components_ *= f;
  connected_ = components_ == 1;
}

AlgebraicSubgroup subgroup_from_lattice(const Lattice& l) { return AlgebraicSubgroup(l); }

bool is_connected(const AlgebraicSubgroup& h) { return h.connected(); }

AlgebraicSubgroup identity_component(const AlgebraicSubgroup& h) {
  if (h.connected()) return h;
  return AlgebraicSubgroup(saturate(h.lattice()));
}

TorusPoint MonomialMap::apply(const std::vector<CycloRational>& t) const {
  if (t.size() != parameters()) throw DomainError("parameter count mismatch");
  TorusPoint p;
  for (std::size_t i = 0; i < ambient(); ++i) {
    CycloRational x;
    for (std::size_t j = 0; j < parameters(); ++j) x = x * t[j].pow(exponents(i, j));
    if (translation) x = x * (*translation)[i];
    p.coords.push_back(x);
  }
  return p;
}

MonomialMap parametrize(const AlgebraicSubgroup& h) {
  return MonomialMap{orthogonal(h.lattice()).basis().transpose(), std::nullopt};
}

std::vector<TorusPoint> coset_representatives(const AlgebraicSubgroup& h) {
  const std::size_t n = h.ambient();
  if (h.lattice().rank() == 0) return {TorusPoint{std::vector<CycloRational>(n)}};
  // With u*A*v = diag(d), x lies in H iff x^{row j of v^-1} is a d_j-th root of
  // unity; x_i = prod_k z_k^{v_ik} inverts the change of variables.
  const SmithResult s = snf(h.lattice().basis());
  const auto& d = s.invariant_factors;
  std::vector<Int> e(d.size(), 0);
  std::vector<TorusPoint> out;
  while (true) {
    TorusPoint p{std::vector<CycloRational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      Rat angle = 0;
      for (std::size_t j = 0; j < d.size(); ++j) angle += Rat(e[j] * s.v(i, j), d[j]);
      p.coords[i] = CycloRational::from_parts(angle, {});
    }
    out.push_back(std::move(p));
    std::size_t j = 0;
    while (j < d.size()) {
      if (++e[j] < d[j]) break;
      e[j] = 0;
      ++j;
    }
    if (j == d.size()) break;
  }
  return out;
}

bool membership(const TorusPoint& p, const AlgebraicSubgroup& h) {
  if (p.ambient() != h.ambient()) throw DomainError("ambient dimension mismatch");
  for (const auto& a : h.lattice().basis_vectors())
    if (!p.monomial(a).is_one()) return false;
  return true;
}

namespace {

void fill_rows(std::size_t n, long bound, const std::vector<std::size_t>& pivots,
               const std::vector<long>& pivot_values, IntMatrix& m, std::size_t cell,
               std::vector<IntMatrix>& out) {
  const std::size_t d = pivots.size();
  if (cell == d * n) {
    out.push_back(m);
    return;
  }
  const std::size_t i = cell / n;
  const std::size_t j = cell % n;
  if (j <= pivots[i]) {
    m(i, j) = j == pivots[i] ? Int(pivot_values[i]) : Int(0);
    fill_rows(n, bound, pivots, pivot_values, m, cell + 1, out);
    return;
  }
  const auto later = std::find(pivots.begin() + static_cast<long>(i) + 1, pivots.end(), j);
  if (later != pivots.end()) {
    const long p = pivot_values[static_cast<std::size_t>(later - pivots.begin())];
    for (long v = 0; v < p; ++v) {
      m(i, j) = v;
      fill_rows(n, bound, pivots, pivot_values, m, cell + 1, out);
    }
    return;
  }
  for (long v = -bound; v <= bound; ++v) {
    m(i, j) = v;
    fill_rows(n, bound, pivots, pivot_values, m, cell + 1, out);
  }
}

void choose_pivots(std::size_t n, std::size_t d, long bound, std::vector<std::size_t>& pivots,
                   std::vector<long>& values, std::vector<IntMatrix>& out) {
  if (pivots.size() == d) {
    IntMatrix m(d, n);
    fill_rows(n, bound, pivots, values, m, 0, out);
    return;
  }
  const std::size_t start = pivots.empty() ? 0 : pivots.back() + 1;
  for (std::size_t c = start; c + (d - pivots.size()) <= n; ++c) {
    for (long p = 1; p <= bound; ++p) {
      pivots.push_back(c);
      values.push_back(p);
      choose_pivots(n, d, bound, pivots, values, out);
      pivots.pop_back();
      values.pop_back();
    }
  }
}

bool lex_less(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

}  // namespace

std::vector<IntMatrix> enumerate_hnf_bases(std::size_t n, std::size_t d, long bound) {
  if (bound < 1) throw DomainError("enumeration bound must be at least 1");
  std::vector<IntMatrix> out;
  if (d > n) return out;
  if (d == 0) return {IntMatrix(0, n)};
  std::vector<std::size_t> pivots;
  std::vector<long> values;
  choose_pivots(n, d, bound, pivots, values, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

void for_each_subgroup(std::size_t n, std::size_t s, long bound, bool connected_only,
                       const std::function<void(const AlgebraicSubgroup&)>& visit) {
  for (std::size_t d = s; d <= n; ++d) {
    for (const auto& basis : enumerate_hnf_bases(n, d, bound)) {
      if (connected_only && minors_gcd(basis, d) != 1) continue;
      visit(AlgebraicSubgroup(Lattice::row_span(basis)));
    }
  }
}

std::vector<AlgebraicSubgroup> enumerate_connected_subgroups(std::size_t n, std::size_t s,
                                                             long bound) {
  std::vector<AlgebraicSubgroup> out;
  for_each_subgroup(n, s, bound, true, [&](const AlgebraicSubgroup& h) { out.push_back(h); });
  return out;
}

std::vector<AlgebraicSubgroup> enumerate_subgroups(std::size_t n, std::size_t s, long bound) {
  std::vector<AlgebraicSubgroup> out;
  for_each_subgroup(n, s, bound, false, [&](const AlgebraicSubgroup& h) { out.push_back(h); });
  return out;
}

}  // namespace torus
