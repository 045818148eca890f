#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/cyclo.hpp"
#include "torus/lattice.hpp"
#include "torus/subgroup.hpp"

namespace torus {

/// Lattice in Z^n spanned by the columns (m_1j, ..., m_nj) of the exponent
/// matrix of the group decomposition.
Lattice free_exponent_lattice(const TorusPoint& p);

enum class WitnessStatus { found, rank_obstruction, none_up_to_bound };

const char* to_string(WitnessStatus s);

struct Witness {
  AlgebraicSubgroup subgroup;
  std::vector<IntVector> basis;  // the chosen defining vectors
  Int basis_bound;               // max |a_ij| over `basis`
  GramDet det_m;
  GramDet det_m_perp;
  GramDet det_l;
  /// 1: subset of the reduced basis of M-perp; 2: subset of the reduced basis
  /// of the relation lattice; 3: bounded enumeration.
  int stage = 0;

  /// basis_bound / sqrt(det_l)
  double bound_ratio() const;
};

struct WitnessResult {
  WitnessStatus status = WitnessStatus::none_up_to_bound;
  std::optional<Witness> witness;
  Lattice m;
  Lattice m_perp;
};

/// Searches for a connected subgroup of codimension >= s containing p; see
/// the README for the search order.
WitnessResult witness_subgroup(const TorusPoint& p, std::size_t s, long search_bound);

/// For primitive l inside primitive `ambient` of equal rank, whether they are
/// equal (always true).  Throws DomainError when the precondition fails.
bool primitivity_promotion_check(const Lattice& l, const Lattice& ambient);

}  // namespace torus
