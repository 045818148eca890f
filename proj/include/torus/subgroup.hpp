#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "torus/cyclo.hpp"
#include "torus/lattice.hpp"

namespace torus {

/// The subgroup {x in G_m^n : x^a = 1 for every a in the defining lattice}.
class AlgebraicSubgroup {
 public:
  AlgebraicSubgroup() = default;
  explicit AlgebraicSubgroup(Lattice l);

  std::size_t ambient() const { return lattice_.ambient(); }
  const Lattice& lattice() const { return lattice_; }
  std::size_t dimension() const { return ambient() - lattice_.rank(); }
  std::size_t codimension() const { return lattice_.rank(); }
  bool connected() const { return connected_; }
  /// Number of cosets of the identity component.
  const Int& component_count() const { return components_; }

  friend bool operator==(const AlgebraicSubgroup& a, const AlgebraicSubgroup& b) {
    return a.lattice_ == b.lattice_;
  }

 private:
  Lattice lattice_;
  bool connected_ = true;
  Int components_ = 1;
};

AlgebraicSubgroup subgroup_from_lattice(const Lattice& l);
bool is_connected(const AlgebraicSubgroup& h);
AlgebraicSubgroup identity_component(const AlgebraicSubgroup& h);

/// t -> translation * (prod_j t_j^{E_ij})_i with E an n x k exponent matrix.
struct MonomialMap {
  IntMatrix exponents;
  std::optional<TorusPoint> translation;

  std::size_t ambient() const { return exponents.rows(); }
  std::size_t parameters() const { return exponents.cols(); }
  TorusPoint apply(const std::vector<CycloRational>& t) const;
};

/// Columns are the canonical basis of the orthogonal lattice; the image is
/// the identity component.
MonomialMap parametrize(const AlgebraicSubgroup& h);

/// Torsion points c_1, ..., c_m (m = component_count) with
/// H = union of c_j * identity_component(H); the first is the identity.
std::vector<TorusPoint> coset_representatives(const AlgebraicSubgroup& h);

bool membership(const TorusPoint& p, const AlgebraicSubgroup& h);

/// Every subgroup of codimension >= s whose canonical defining basis has
/// entries bounded by `bound` in absolute value, ascending rank, then
/// lexicographic on the basis.  With connected_only, primitive lattices only.
void for_each_subgroup(std::size_t n, std::size_t s, long bound, bool connected_only,
                       const std::function<void(const AlgebraicSubgroup&)>& visit);

std::vector<AlgebraicSubgroup> enumerate_connected_subgroups(std::size_t n, std::size_t s,
                                                             long bound);
std::vector<AlgebraicSubgroup> enumerate_subgroups(std::size_t n, std::size_t s, long bound);

/// All canonical (HNF) rank-d bases in Z^n with entries bounded by `bound`,
/// lexicographically ordered.
std::vector<IntMatrix> enumerate_hnf_bases(std::size_t n, std::size_t d, long bound);

}  // namespace torus
