#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "torus/cyclo.hpp"
#include "torus/integer.hpp"

namespace torus {

/// Dense univariate polynomial over Q, coefficients low to high, no trailing
/// zeros (the zero polynomial has no coefficients).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly constant(const Rat& c);
  static RatPoly x();
  static RatPoly monomial(const Rat& c, std::size_t k);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;
  /// this(g(x))
  RatPoly compose(const RatPoly& g) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  RatPoly pow(unsigned k) const;
  /// Number of leading zero coefficients (the multiplicity of the root 0).
  std::size_t low_order() const;
  RatPoly shift_down(std::size_t k) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& s, const RatPoly& a);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// Monic gcd (zero if both are zero).
RatPoly gcd(RatPoly a, RatPoly b);

/// Integer coefficients of the primitive part (positive leading coefficient).
IntVector primitive_part(const RatPoly& f);
RatPoly from_integers(const IntVector& c);

/// Square-free decomposition: f = lc * prod_i g_i^i, returned as (g_i, i)
/// pairs with monic square-free, pairwise coprime g_i.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f);

/// m-th cyclotomic polynomial (cached, thread-safe).
const RatPoly& cyclotomic_polynomial(std::uint64_t m);

struct ModelRoot {
  CycloRational root;
  unsigned multiplicity = 0;
};

struct ModelRootReport {
  std::vector<ModelRoot> roots;  // distinct, in discovery order
  /// Degree left after removing every model root; counts roots that are not
  /// of the form (root of unity) * rational, with multiplicity.
  std::size_t residual_degree = 0;
  /// Multiplicity of the root 0 (never a torus point).
  std::size_t zero_multiplicity = 0;
  /// f with the root 0 and every model root divided out.
  RatPoly residual;
};

/// Every root of f of the shape zeta_m * a/b.  Such a root has minimal
/// polynomial a^phi(m) Phi_m(b t / a), so a^phi | f(0) and b^phi | lc(f) for
/// the primitive integer form; the search over m with phi(m) <= deg f and over
/// those a, b is therefore exhaustive.
ModelRootReport model_roots(const RatPoly& f, std::uint64_t trial_bound = kDefaultTrialBound);

struct RationalRoot {
  Rat value;
  unsigned multiplicity = 0;
};

/// Rational roots (including 0) with multiplicities; sorted ascending.
std::vector<RationalRoot> rational_roots(const RatPoly& f,
                                         std::uint64_t trial_bound = kDefaultTrialBound);

}  // namespace torus
