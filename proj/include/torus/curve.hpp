#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torus/cyclo.hpp"
#include "torus/lattice.hpp"
#include "torus/polynomial.hpp"

namespace torus {

/// num / den in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(RatPoly::constant(1)) {}
  RatFunc(RatPoly num, RatPoly den);
  static RatFunc constant(const Rat& c) { return {RatPoly::constant(c), RatPoly::constant(1)}; }

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;
  RatFunc pow(long k) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  RatPoly num_, den_;
};

/// Parses a rational function of one variable (named `var`).
RatFunc parse_ratfunc(const std::string& text, const std::string& var = "t");

/// The closure of t -> (f_1(t), ..., f_n(t)).
struct ParamCurve {
  std::vector<RatFunc> coords;
  std::size_t ambient() const { return coords.size(); }
  std::string to_string() const;
};

/// `(f1, f2, ...)` in the variable t; throws DomainError on a zero coordinate.
ParamCurve parse_curve(const std::string& text);

struct SupportPoint {
  enum class Kind { zero, model, atom, infinity };
  Kind kind = Kind::zero;
  std::optional<CycloRational> value;  // for model points
  RatPoly atom;                        // squarefree factor whose roots share the row
  std::size_t degree = 1;              // number of geometric points in the row
  std::string label() const;
  bool is_rational() const;
};

/// Rows: support points; columns: coordinate functions; entries: orders.
struct DivisorTable {
  std::vector<SupportPoint> support;
  IntMatrix orders;  // support.size() x n

  /// Sum over rows of degree * order, per column (all zero for a curve).
  IntVector column_degrees() const;
};

DivisorTable divisor_table(const ParamCurve& c, std::uint64_t trial_bound = kDefaultTrialBound);

struct CosetContainment {
  Lattice kernel;         // all a with sum a_i div(f_i) = 0
  IntVector character;    // a representative (shortest reduced vector)
  Rat constant;           // prod f_i^{a_i} for that representative
};

/// Present iff some nonzero a makes prod f_i^{a_i} constant.
std::optional<CosetContainment> coset_containment(const ParamCurve& c);

/// prod_i lc(f_i)^{a_i}: the constant value of prod f_i^{a_i} for a in the kernel.
Rat character_constant(const ParamCurve& c, const IntVector& a);

struct PrimitiveCharacter {
  IntVector character;
  Int multiplicity;  // M >= 1
  std::size_t y = 0, z = 0;  // rows of the divisor table
};

struct CharacterSearch {
  DivisorTable table;
  std::vector<PrimitiveCharacter> characters;
  /// Basis of the constant characters (zero divisor), if any.
  std::vector<IntVector> degenerate;
  /// Box used when constant characters make the solution sets infinite.
  long box_bound = 0;
};

/// Primitive a with sum a_i div(f_i) = M((Y) - (Z)) for support points Y != Z.
/// Without constant characters every pair {Y, Z} is solved exactly; otherwise
/// primitive a with |a_i| <= box_bound are searched.
CharacterSearch find_primitive_characters(const ParamCurve& c, long box_bound = 2);

}  // namespace torus
