#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "torus/curve.hpp"
#include "torus/dependence.hpp"
#include "torus/laurent.hpp"
#include "torus/subgroup.hpp"

namespace torus {

struct Intersection {
  std::vector<TorusPoint> points;  // sorted, distinct
  /// Roots of the pulled-back equation outside the model, with multiplicity.
  std::size_t residual_roots = 0;
  /// Coset shifts c with c * identity_component(h) contained in X.
  std::vector<TorusPoint> contained_cosets;
  bool contained() const { return !contained_cosets.empty(); }
};

/// X meets translation * h, for subgroups of dimension <= 1.  Each component
/// of h is pulled back along its monomial parametrization and the resulting
/// univariate equation is solved in the model.
Intersection intersect_curve_subgroup(const LaurentSystem& x, const AlgebraicSubgroup& h,
                                      const std::optional<TorusPoint>& translation = std::nullopt);

struct SieveOptions {
  std::size_t codim = 1;
  long bound = 1;
  /// Restrict to connected subgroups (primitive lattices).
  bool connected_only = false;
  unsigned workers = 1;
  std::optional<double> height_bound;
};

struct SievePoint {
  TorusPoint point;
  AlgebraicSubgroup subgroup;             // first subgroup (in stream order) containing it
  std::optional<TorusPoint> translation;  // gamma element, for the enlarged sieve
  IntVector gamma_exponents;              // flattened n_il of the translation
  double height = 0;
};

struct AnomalySignal {
  AlgebraicSubgroup subgroup;
  TorusPoint coset;  // shift of the contained component
};

struct SieveReport {
  std::vector<SievePoint> points;
  std::vector<AnomalySignal> anomalies;
  std::size_t subgroups_examined = 0;
  std::size_t translations = 1;
  std::size_t residual_roots = 0;
  double max_height = 0;
  std::optional<double> height_bound;
  bool height_bound_ok = true;
  /// Largest |n_il| and |m_ij| in the decompositions of the points modulo
  /// Gamma (enlarged sieve only).
  Int max_gamma_exponent = 0;
  Int max_residual_exponent = 0;
};

/// Points of X on subgroups of codimension >= codim with bounded canonical
/// bases.  Requires codim >= ambient - 1.
SieveReport abelian_point_sieve(const LaurentSystem& x, const SieveOptions& opt);

/// As abelian_point_sieve on translates gamma * H, gamma running over the
/// products of Gamma generators with exponents bounded by gamma_exp_bound.
SieveReport gamma_enlarged_sieve(const LaurentSystem& x, const SieveOptions& opt,
                                 const GammaGroup& gamma, long gamma_exp_bound);

enum class GateVerdict { zero_dimensional_ok, anomalous_witness, positive_dimensional };
const char* to_string(GateVerdict v);

struct GateResult {
  GateVerdict verdict = GateVerdict::zero_dimensional_ok;
  /// dim(X meet H): 0 or 1 (a curve X).
  std::size_t intersection_dim = 0;
};

/// Hypersurfaces in G_m^2.  Throws DomainError for other shapes.
GateResult anomaly_gate(const LaurentSystem& x, const AlgebraicSubgroup& h, std::size_t s);
GateResult anomaly_gate(const ParamCurve& c, const AlgebraicSubgroup& h, std::size_t s);

}  // namespace torus
