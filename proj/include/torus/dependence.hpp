#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "torus/cyclo.hpp"
#include "torus/lattice.hpp"

namespace torus {

/// Sorted union of the primes occurring in the given numbers.
std::vector<Int> prime_support(const std::vector<CycloRational>& values);

/// Exponent vector of c over the prime list (primes missing from the list
/// must not occur in c).
IntVector exponent_vector(const CycloRational& c, const std::vector<Int>& primes);
CycloRational from_exponents(const std::vector<Int>& primes, const IntVector& e);

/// h(prod p^e) = max(sum_{e>0} e log p, -sum_{e<0} e log p)
double height_of_exponents(const std::vector<Int>& primes, const IntVector& e);

/// {k in Z^n : prod xi_i^{k_i} = 1}
Lattice relation_lattice(const TorusPoint& p);

bool is_multiplicatively_dependent(const TorusPoint& p);
bool is_primitively_dependent(const TorusPoint& p);

/// A relation with coprime entries, when one exists.
std::optional<IntVector> primitive_relation(const TorusPoint& p);

/// xi_i = zeta_i * prod_j g_j^{m_ij}
struct GroupDecomposition {
  std::vector<Int> primes;
  std::vector<IntVector> generator_exponents;  // r vectors over `primes`
  std::vector<CycloRational> generators;
  IntMatrix exponent_matrix;  // n x r
  std::vector<CycloRational> torsion_parts;

  std::size_t rank() const { return generators.size(); }
  TorusPoint reconstruct() const;
};

GroupDecomposition group_decomposition(const TorusPoint& p);

/// min over sampled nonzero b (|b_j| <= 10) of h(prod g^b) / sum |b_j| h(g_j).
double schlickewei_ratio(const GroupDecomposition& d, std::size_t samples, std::uint64_t seed);

/// Per-coordinate generator lists.
struct GammaGroup {
  std::vector<std::vector<CycloRational>> generators;
};

struct GammaDecomposition {
  std::vector<IntVector> gamma_exponents;  // n_il, one list per coordinate
  GroupDecomposition residual;
  /// False when some residual generator is dependent on Gamma modulo torsion
  /// (a coordinate lies in the division hull of Gamma but not in Gamma).
  bool residual_independent = true;

  TorusPoint reconstruct(const GammaGroup& gamma) const;
};

GammaDecomposition group_decomposition_mod_gamma(const TorusPoint& p, const GammaGroup& gamma);

}  // namespace torus
