#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torus/integer.hpp"

namespace torus {

/// A number zeta * q with zeta a root of unity and q a positive rational, kept
/// as the angle of zeta (in [0, 1), lowest terms) and the prime factorization
/// of q.  The sign of a rational is folded into the angle (-1 has angle 1/2).
class CycloRational {
 public:
  CycloRational() = default;  // 1

  static CycloRational root_of_unity(const Int& order, const Int& exp);
  /// Throws DomainError on zero, UnfactorableError beyond the trial bound.
  static CycloRational from_rational(const Rat& q, std::uint64_t trial_bound = kDefaultTrialBound);
  static CycloRational from_parts(const Rat& angle, std::map<Int, Int> prime_exponents);

  const Rat& angle() const { return angle_; }
  Int torsion_order() const { return angle_.get_den(); }
  Int torsion_exp() const { return angle_.get_num(); }
  const std::map<Int, Int>& prime_exponents() const { return primes_; }

  bool is_torsion() const { return primes_.empty(); }
  bool is_one() const { return primes_.empty() && angle_ == 0; }
  /// The positive rational q.
  Rat rational_part() const;
  Int numerator() const;
  Int denominator() const;
  CycloRational torsion_part() const { return from_parts(angle_, {}); }
  CycloRational free_part() const { return from_parts(Rat(0), primes_); }
  /// Exponent of `p` in q (0 if absent).
  Int exponent_of(const Int& p) const;

  CycloRational inverse() const;
  CycloRational pow(const Int& k) const;
  friend CycloRational operator*(const CycloRational& a, const CycloRational& b);
  friend CycloRational operator/(const CycloRational& a, const CycloRational& b) {
    return a * b.inverse();
  }

  /// Absolute logarithmic Weil height: log max(num(q), den(q)).
  double weil_height() const;

  std::string to_string() const;

  friend bool operator==(const CycloRational&, const CycloRational&) = default;
  friend std::strong_ordering operator<=>(const CycloRational& a, const CycloRational& b);

 private:
  Rat angle_{0};
  std::map<Int, Int> primes_;
};

/// Point of G_m^n whose coordinates are CycloRationals.
struct TorusPoint {
  std::vector<CycloRational> coords;

  std::size_t ambient() const { return coords.size(); }
  const CycloRational& operator[](std::size_t i) const { return coords[i]; }

  /// prod_i coords_i^{a_i}
  CycloRational monomial(const IntVector& a) const;
  /// Coordinatewise product.
  friend TorusPoint operator*(const TorusPoint& a, const TorusPoint& b);
  /// Largest coordinate height.
  double max_height() const;
  std::string to_string() const;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
};

/// Text syntax: products/quotients of integers, p^e powers, zeta(N) or
/// zeta(N,k) and parenthesised sub-expressions, e.g. `zeta(6,1)*2/3*5^-2`.
CycloRational parse_cyclo(const std::string& text, std::uint64_t trial_bound = kDefaultTrialBound);
/// `(c1, c2, ...)`; the parentheses are optional.
TorusPoint parse_point(const std::string& text, std::uint64_t trial_bound = kDefaultTrialBound);

/// Exact value of a sum  sum_j q_j * zeta^{theta_j}; used to test vanishing.
/// Keys are angles in [0,1).
using CycloSum = std::map<Rat, Rat>;

void add_term(CycloSum& sum, const CycloRational& c, const Rat& coeff);

}  // namespace torus
