#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/laurent.hpp"
#include "torus/polynomial.hpp"

namespace torus {

/// Univariate polynomial map over Q of degree >= 2.
class PolyMap {
 public:
  explicit PolyMap(RatPoly f);

  const RatPoly& poly() const { return f_; }
  long degree() const { return f_.degree(); }
  Rat operator()(const Rat& x) const { return f_.eval(x); }
  /// f composed with itself m times (m >= 1).
  RatPoly iterate(unsigned m) const;
  std::string to_string() const { return f_.to_string("x"); }

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  RatPoly f_;
};

PolyMap parse_polymap(const std::string& text);

/// h(a/b) = log max(|a|, |b|)
double weil_height(const Rat& q);

/// C with |h(f(x)) - d h(x)| <= C for every rational x.
double height_constant(const PolyMap& f);

inline constexpr std::size_t kDefaultDigitCap = 2'000'000;

struct CanonicalHeightEstimate {
  double value = 0;
  unsigned iterations = 0;
  double error_bound = 0;  // constant / ((d - 1) d^k)
  double constant = 0;
};

/// h(f^k(a)) / d^k for the least k with error_bound <= target_err.  Throws
/// DomainError when an iterate exceeds digit_cap decimal digits.
CanonicalHeightEstimate canonical_height(const PolyMap& f, const Rat& a, double target_err,
                                         std::size_t digit_cap = kDefaultDigitCap);

struct Periodicity {
  unsigned preperiod = 0;
  unsigned period = 0;
};

/// Exact orbit of a.  Absent when no repeat occurs within max_iter steps or
/// the orbit provably escapes (height above C/(d-1) grows strictly).
std::optional<Periodicity> is_periodic(const PolyMap& f, const Rat& a, unsigned max_iter,
                                       std::size_t digit_cap = kDefaultDigitCap);

/// Non-constant g with deg g <= deg_bound commuting with some f^m, m <= iterate_bound.
/// Sorted by degree, then coefficients; each verified by exact expansion.
std::vector<RatPoly> commuting_polys(const PolyMap& f, long deg_bound, unsigned iterate_bound = 1);

enum class MapClass { monomial_conjugate, chebyshev_conjugate, neither };
const char* to_string(MapClass c);

/// sigma(x) = alpha (x + shift) with alpha^alpha_power = alpha_power_value;
/// alpha is set when it is rational.  alpha_squared is set in the Chebyshev case.
struct AffineConjugacy {
  Rat shift;
  long alpha_power = 1;
  Rat alpha_power_value = 1;
  std::optional<Rat> alpha;
  std::optional<Rat> alpha_squared;
  /// sigma f sigma^-1; for the Chebyshev case T_d or -T_d with T_2 = x^2 - 2.
  RatPoly target;
};

struct Classification {
  MapClass kind = MapClass::neither;
  std::optional<AffineConjugacy> sigma;
};

Classification chebyshev_or_monomial(const PolyMap& f);

/// T_d normalized by T_d(z + 1/z) = z^d + z^-d.
RatPoly chebyshev(long d);

struct PeriodicCurvePoint {
  Rat x, y;
  double height = 0;  // max of the coordinate heights
};

struct GraphIntersection {
  RatPoly g;
  bool contained = false;  // C vanishes on y = g(x)
  std::vector<PeriodicCurvePoint> points;
  long residual = 0;       // irrational roots with multiplicity
};

struct VerticalIntersection {
  Rat zeta;
  bool contained = false;  // x = zeta is a component of C
  std::vector<PeriodicCurvePoint> points;
  long residual = 0;
};

struct PeriodicIntersectionReport {
  std::vector<GraphIntersection> graphs;
  std::vector<VerticalIntersection> verticals;
  std::vector<Rat> periodic;  // rational points of period <= iterate_bound
  double max_periodic_height = 0;
  double max_point_height = 0;
};

/// C(x, y) polynomial (non-negative exponents in two variables).  Throws
/// DomainError if f is conjugate to a monomial or Chebyshev polynomial.
PeriodicIntersectionReport curve_periodic_intersection(const LaurentPoly& c, const PolyMap& f,
                                                       long deg_bound,
                                                       unsigned iterate_bound = 2);

/// f o p == p o q, exactly.
bool check_semiconjugacy(const RatPoly& f, const RatPoly& p, const RatPoly& q);

}  // namespace torus
