#pragma once

#include <map>
#include <string>
#include <vector>

#include "torus/cyclo.hpp"
#include "torus/integer.hpp"
#include "torus/matrix.hpp"

namespace torus {

using Exponent = std::vector<long>;

/// Laurent polynomial in x1..xn with rational coefficients.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t ambient = 0) : n_(ambient) {}
  static LaurentPoly constant(std::size_t ambient, const Rat& c);
  static LaurentPoly monomial(const Exponent& e, const Rat& c);
  static LaurentPoly variable(std::size_t ambient, std::size_t index);

  std::size_t ambient() const { return n_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Same polynomial viewed in a larger ambient space.
  LaurentPoly with_ambient(std::size_t n) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  /// Negative powers only for monomials; throws DomainError otherwise.
  LaurentPoly pow(long k) const;

  /// Exact value at p as a sum of roots of unity with rational weights.
  CycloSum evaluate(const TorusPoint& p) const;
  bool vanishes_at(const TorusPoint& p) const;

  /// Pulls back along x_i = shift_i * prod_j t_j^{E_ij}: coefficients keyed by
  /// the exponent of t.
  std::map<Exponent, CycloSum> substitute(const IntMatrix& e, const TorusPoint& shift) const;

  std::string to_string() const;

 private:
  void add(const Exponent& e, const Rat& c);
  std::size_t n_;
  std::map<Exponent, Rat> terms_;
};

struct LaurentSystem {
  std::size_t ambient = 0;
  std::vector<LaurentPoly> equations;

  bool vanishes_at(const TorusPoint& p) const;
  std::string to_string() const;
};

/// Variables x1..xn with aliases x, y, z for x1, x2, x3; rational coefficients
/// written as quotients; '=' allowed (lhs - rhs).  `ambient` 0 means "as many
/// variables as the highest index used".  Throws ParseError.
LaurentPoly parse_laurent(const std::string& text, std::size_t ambient = 0);
/// Equations separated by ';'.  Zero equations are rejected.
LaurentSystem parse_system(const std::string& text, std::size_t ambient = 0);

}  // namespace torus
