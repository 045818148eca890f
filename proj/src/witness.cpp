#include "torus/witness.hpp"

#include <algorithm>
#include <cmath>

#include "torus/dependence.hpp"
#include "torus/error.hpp"

namespace torus {

Lattice free_exponent_lattice(const TorusPoint& p) {
  const GroupDecomposition d = group_decomposition(p);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < d.rank(); ++j) cols.push_back(d.exponent_matrix.col(j));
  return Lattice::span(p.ambient(), cols);
}

const char* to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::found:
      return "found";
    case WitnessStatus::rank_obstruction:
      return "rank-obstruction";
    case WitnessStatus::none_up_to_bound:
      return "none-up-to-bound";
  }
  return "";
}

double Witness::bound_ratio() const { return basis_bound.get_d() / det_l.covolume(); }

namespace {

// s-subsets of {0..k-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t k, std::size_t s) {
  std::vector<std::vector<std::size_t>> out;
  if (s > k) return out;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == k - s + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Candidate {
  std::vector<IntVector> basis;
  GramDet gram;
};

// Best s-subset (least gram, then first in index order) passing `accept`.
template <class Accept>
std::optional<Candidate> best_subset(const std::vector<IntVector>& reduced, std::size_t s,
                                     Accept accept) {
  std::optional<Candidate> best;
  for (const auto& idx : subsets(reduced.size(), s)) {
    std::vector<IntVector> pick;
    for (auto i : idx) pick.push_back(reduced[i]);
    if (!accept(pick)) continue;
    GramDet g = gram_det(pick);
    if (!best || g < best->gram) best = Candidate{std::move(pick), std::move(g)};
  }
  return best;
}

Witness make_witness(std::size_t n, Candidate c, const Lattice& m, const Lattice& m_perp,
                     int stage) {
  Witness w;
  w.subgroup = AlgebraicSubgroup(Lattice::span(n, c.basis));
  w.basis_bound = 0;
  for (const auto& v : c.basis) w.basis_bound = std::max(w.basis_bound, max_abs(v));
  w.basis = std::move(c.basis);
  w.det_m = gram_det(m);
  w.det_m_perp = gram_det(m_perp);
  w.det_l = std::move(c.gram);
  w.stage = stage;
  return w;
}

}  // namespace

WitnessResult witness_subgroup(const TorusPoint& p, std::size_t s, long search_bound) {
  const std::size_t n = p.ambient();
  if (s > n) throw DomainError("codimension exceeds the ambient dimension");
  WitnessResult res;
  res.m = free_exponent_lattice(p);
  res.m_perp = orthogonal(res.m);
  if (res.m_perp.rank() < s) {
    res.status = WitnessStatus::rank_obstruction;
    return res;
  }
  if (s == 0) {
    res.status = WitnessStatus::found;
    res.witness = make_witness(n, Candidate{{}, GramDet{1}}, res.m, res.m_perp, 1);
    return res;
  }
  const Lattice relations = relation_lattice(p);

  const auto perp_basis = reduced_basis(res.m_perp).basis;
  auto hit = best_subset(perp_basis, s, [&](const std::vector<IntVector>& pick) {
    return std::all_of(pick.begin(), pick.end(),
                       [&](const IntVector& v) { return contains(relations, v); });
  });
  int stage = 1;
  if (!hit && relations.rank() >= s) {
    stage = 2;
    hit = best_subset(reduced_basis(relations).basis, s, [&](const std::vector<IntVector>& pick) {
      return is_primitive(Lattice::span(n, pick));
    });
  }
  if (!hit) {
    stage = 3;
    for (long b = 1; b <= search_bound && !hit; ++b) {
      for (const auto& basis : enumerate_hnf_bases(n, s, b)) {
        if (basis.max_abs() != b) continue;
        const auto rows = basis.row_list();
        if (!std::all_of(rows.begin(), rows.end(),
                         [&](const IntVector& v) { return contains(relations, v); }))
          continue;
        if (minors_gcd(basis, s) != 1) continue;
        hit = Candidate{rows, gram_det(rows)};
        break;
      }
    }
  }
  if (!hit) {
    res.status = WitnessStatus::none_up_to_bound;
    return res;
  }
  res.status = WitnessStatus::found;
  res.witness = make_witness(n, std::move(*hit), res.m, res.m_perp, stage);
  return res;
}

bool primitivity_promotion_check(const Lattice& l, const Lattice& ambient) {
  if (l.ambient() != ambient.ambient() || l.rank() != ambient.rank())
    throw DomainError("lattices must have equal rank in the same ambient space");
  if (!is_primitive(l) || !is_primitive(ambient))
    throw DomainError("both lattices must be primitive");
  if (!is_sublattice(l, ambient)) throw DomainError("lattice is not contained in the ambient one");
  return l == ambient;
}

}  // namespace torus
