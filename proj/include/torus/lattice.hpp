#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "torus/integer.hpp"
#include "torus/matrix.hpp"

namespace torus {

/// Integer lattice in Z^n.  The basis is always stored in canonical row HNF
/// (positive pivots), so two lattices are equal iff their values compare equal.
class Lattice {
 public:
  /// The zero lattice of Z^n.
  explicit Lattice(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  /// Lattice generated by arbitrary (possibly dependent) vectors.
  static Lattice span(std::size_t ambient, const std::vector<IntVector>& generators);
  /// Lattice generated by the rows of `m`.
  static Lattice row_span(const IntMatrix& m);
  static Lattice full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVector> basis_vectors() const { return basis_.row_list(); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t ambient_;
  IntMatrix basis_;
};

/// Exact det(B * B^T); the squared covolume.  1 for the zero lattice.
struct GramDet {
  Int value;
  double covolume() const;
  friend bool operator==(const GramDet& a, const GramDet& b) { return a.value == b.value; }
  friend bool operator<(const GramDet& a, const GramDet& b) { return a.value < b.value; }
  friend bool operator<=(const GramDet& a, const GramDet& b) { return a.value <= b.value; }
};

GramDet gram_det(const Lattice& l);
GramDet gram_det(const std::vector<IntVector>& basis);

/// Q*L intersected with Z^n.
Lattice saturate(const Lattice& l);

/// gcd of the maximal minors of the basis equals 1.
bool is_primitive(const Lattice& l);

/// {u in Z^n : u.b = 0 for every b in l}; primitive of rank n - rank(l).
Lattice orthogonal(const Lattice& l);

bool contains(const Lattice& l, const IntVector& v);
/// Integer coordinates of v in the canonical basis, if v lies in l.
std::optional<IntVector> member_coords(const Lattice& l, const IntVector& v);

/// True when every basis vector of `sub` lies in `super`.
bool is_sublattice(const Lattice& sub, const Lattice& super);

inline constexpr double kLllDelta = 0.99;

/// In-place LLL reduction (exact rational Gram-Schmidt, delta = 99/100).
/// Input vectors must be linearly independent.
void lll_reduce(std::vector<IntVector>& basis);

struct ReducedBasis {
  std::vector<IntVector> basis;
  /// prod ||b_i|| / sqrt(gram_det); 1 exactly for an orthogonal basis.
  double product_ratio = 1.0;
};

/// LLL-reduced basis of a lattice of rank >= 1.
ReducedBasis reduced_basis(const Lattice& l);

double product_ratio(const std::vector<IntVector>& basis);

/// For x = sum lambda_j b_j, returns max_j |lambda_j| * ||b_j|| / ||x||: the
/// constant in the small-coefficient bound for this particular vector.
/// x must be a nonzero vector of the lattice spanned by `basis`.
double coefficient_ratio(const std::vector<IntVector>& basis, const IntVector& x);

/// Rational coordinates of x in an independent basis, if x is in its Q-span.
std::optional<std::vector<Rat>> rational_coords(const std::vector<IntVector>& basis,
                                                const IntVector& x);

double norm(const IntVector& v);

}  // namespace torus
