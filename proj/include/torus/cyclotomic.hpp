#pragma once

#include <cstdint>
#include <vector>

#include "torus/cyclo.hpp"
#include "torus/polynomial.hpp"

namespace torus {

/// Q(zeta_N) as Q[x] / Phi_N; elements are RatPolys of degree < phi(N).
class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint64_t order);

  std::uint64_t order() const { return order_; }
  RatPoly reduce(const RatPoly& a) const;
  RatPoly mul(const RatPoly& a, const RatPoly& b) const { return reduce(a * b); }
  /// coeff * zeta^angle; angle * N must be an integer.
  RatPoly element(const Rat& angle, const Rat& coeff) const;
  RatPoly element(const CycloSum& sum) const;
  RatPoly element(const CycloRational& c) const;
  /// The automorphism zeta -> zeta^a (gcd(a, N) = 1).
  RatPoly conjugate(const RatPoly& a, std::uint64_t k) const;
  /// The image of an element of a subfield Q(zeta_M), M | N.
  RatPoly lift(const RatPoly& a, std::uint64_t from_order) const;

 private:
  std::uint64_t order_;
  const RatPoly* modulus_;
};

/// lcm of the denominators of the angles occurring in the sum.
std::uint64_t sum_order(const CycloSum& sum);
std::uint64_t torsion_order_u64(const CycloRational& c);

bool is_zero(const CycloSum& sum);

/// Roots in the model of  sum_k coeffs[k] t^k  whose coefficients lie in a
/// cyclotomic field.  The norm to Q bounds the candidates (every root of f is
/// a root of its norm), and each candidate is confirmed and deflated exactly.
ModelRootReport cyclo_poly_roots(const std::vector<CycloSum>& coeffs,
                                 std::uint64_t trial_bound = kDefaultTrialBound);

}  // namespace torus
