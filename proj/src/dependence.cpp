#include "torus/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "torus/error.hpp"

namespace torus {

std::vector<Int> prime_support(const std::vector<CycloRational>& values) {
  std::set<Int> primes;
  for (const auto& v : values)
    for (const auto& [p, e] : v.prime_exponents()) primes.insert(p);
  return {primes.begin(), primes.end()};
}

IntVector exponent_vector(const CycloRational& c, const std::vector<Int>& primes) {
  IntVector e;
  e.reserve(primes.size());
  for (const auto& p : primes) e.push_back(c.exponent_of(p));
  return e;
}

CycloRational from_exponents(const std::vector<Int>& primes, const IntVector& e) {
  std::map<Int, Int> m;
  for (std::size_t i = 0; i < primes.size(); ++i) m[primes[i]] = e[i];
  return CycloRational::from_parts(Rat(0), std::move(m));
}

double height_of_exponents(const std::vector<Int>& primes, const IntVector& e) {
  double up = 0, down = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const double term = e[i].get_d() * log_abs(primes[i]);
    if (e[i] > 0) up += term;
    if (e[i] < 0) down -= term;
  }
  return std::max(up, down);
}

namespace {

std::vector<IntVector> exponent_rows(const TorusPoint& p, const std::vector<Int>& primes) {
  std::vector<IntVector> rows;
  for (const auto& c : p.coords) rows.push_back(exponent_vector(c, primes));
  return rows;
}

}  // namespace

Lattice relation_lattice(const TorusPoint& p) {
  const std::size_t n = p.ambient();
  const auto primes = prime_support(p.coords);
  const auto rows = exponent_rows(p, primes);

  // k with sum_i k_i E_i = 0: orthogonal complement of the columns of E.
  std::vector<IntVector> cols(primes.size(), IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < primes.size(); ++j) cols[j][i] = rows[i][j];
  const Lattice free_kernel = orthogonal(Lattice::span(n, cols));

  Int order = 1;
  for (const auto& c : p.coords) order = lcm(order, c.torsion_order());
  if (order == 1 || free_kernel.rank() == 0) return free_kernel;

  IntVector residues(n);
  for (std::size_t i = 0; i < n; ++i) residues[i] = Int(p[i].angle() * Rat(order));

  // lambda with sum_j lambda_j (w_j . c) = 0 mod N, via the kernel of (s | N).
  const auto w = free_kernel.basis_vectors();
  const std::size_t t = w.size();
  IntVector s(t + 1);
  for (std::size_t j = 0; j < t; ++j) s[j] = dot(w[j], residues);
  s[t] = order;
  const Lattice lambda = orthogonal(Lattice::span(t + 1, {s}));

  std::vector<IntVector> gens;
  for (const auto& l : lambda.basis_vectors()) {
    IntVector k(n, 0);
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t i = 0; i < n; ++i) k[i] += l[j] * w[j][i];
    gens.push_back(std::move(k));
  }
  return Lattice::span(n, gens);
}

bool is_multiplicatively_dependent(const TorusPoint& p) { return relation_lattice(p).rank() > 0; }

std::optional<IntVector> primitive_relation(const TorusPoint& p) {
  // With u*B*v = diag(d), the relations are (x_1 d_1, ..., x_r d_r) v^-1, whose
  // content is a multiple of d_1; so a coprime relation exists iff d_1 = 1.
  const Lattice r = relation_lattice(p);
  if (r.rank() == 0) return std::nullopt;
  const SmithResult s = snf(r.basis());
  if (s.invariant_factors.front() != 1) return std::nullopt;
  return s.v_inv.row(0);
}

bool is_primitively_dependent(const TorusPoint& p) { return primitive_relation(p).has_value(); }

TorusPoint GroupDecomposition::reconstruct() const {
  TorusPoint p;
  for (std::size_t i = 0; i < torsion_parts.size(); ++i) {
    CycloRational x = torsion_parts[i];
    for (std::size_t j = 0; j < rank(); ++j) x = x * generators[j].pow(exponent_matrix(i, j));
    p.coords.push_back(x);
  }
  return p;
}

namespace {

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

GroupDecomposition decompose_over(const TorusPoint& p, const std::vector<Int>& primes) {
  const std::size_t n = p.ambient();
  const auto rows = exponent_rows(p, primes);
  GroupDecomposition d;
  d.primes = primes;
  for (const auto& c : p.coords) d.torsion_parts.push_back(c.torsion_part());
  const Lattice l = Lattice::span(primes.size(), rows);
  if (l.rank() == 0) {
    d.exponent_matrix = IntMatrix(n, 0);
    return d;
  }
  auto basis = reduced_basis(l).basis;
  for (auto& b : basis) normalize_sign(b);
  d.generator_exponents = basis;
  for (const auto& b : basis) d.generators.push_back(from_exponents(primes, b));
  d.exponent_matrix = IntMatrix(n, basis.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto coords = rational_coords(basis, rows[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) d.exponent_matrix(i, j) = Int((*coords)[j]);
  }
  return d;
}

}  // namespace

GroupDecomposition group_decomposition(const TorusPoint& p) {
  return decompose_over(p, prime_support(p.coords));
}

double schlickewei_ratio(const GroupDecomposition& d, std::size_t samples, std::uint64_t seed) {
  if (d.rank() == 0) throw DomainError("schlickewei ratio needs rank at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-10, 10);
  std::vector<double> h;
  for (const auto& g : d.generator_exponents) h.push_back(height_of_exponents(d.primes, g));
  double best = 1.0;
  bool any = false;
  for (std::size_t s = 0; s < samples; ++s) {
    IntVector e(d.primes.size(), 0);
    double denom = 0;
    for (std::size_t j = 0; j < d.rank(); ++j) {
      const long b = coeff(rng);
      denom += std::abs(static_cast<double>(b)) * h[j];
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += b * d.generator_exponents[j][k];
    }
    if (denom == 0) continue;
    const double ratio = height_of_exponents(d.primes, e) / denom;
    best = any ? std::min(best, ratio) : ratio;
    any = true;
  }
  return best;
}

TorusPoint GammaDecomposition::reconstruct(const GammaGroup& gamma) const {
  TorusPoint p = residual.reconstruct();
  for (std::size_t i = 0; i < p.ambient(); ++i)
    for (std::size_t l = 0; l < gamma_exponents[i].size(); ++l)
      p.coords[i] = p.coords[i] * gamma.generators[i][l].pow(gamma_exponents[i][l]);
  return p;
}

namespace {

// ceil(q - 1/2): nearest integer, ties toward the smaller one.
Int round_down_ties(const Rat& q) {
  const Rat shifted = q - Rat(1, 2);
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return c;
}

// Integer n with sum_l n_l gens_l close to the projection of e onto span(gens).
IntVector closest_combination(const std::vector<IntVector>& gens, const IntVector& e) {
  IntVector n(gens.size(), 0);
  const Lattice l = Lattice::span(e.size(), gens);
  if (l.rank() == 0) return n;
  const auto basis = reduced_basis(l).basis;

  // Least squares coefficients of e in the reduced basis: solve G c = B e.
  const std::size_t r = basis.size();
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = Rat(dot(basis[i], basis[j]));
    a[i][r] = Rat(dot(basis[i], e));
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rat f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntVector v(e.size(), 0);
  for (std::size_t i = 0; i < r; ++i) {
    const Int c = round_down_ties(a[i][r] / a[i][i]);
    for (std::size_t k = 0; k < e.size(); ++k) v[k] += c * basis[i][k];
  }

  // Express v through the original generators: h = u * G, rows of h span l.
  const IntMatrix g = IntMatrix::from_rows(gens, e.size());
  const HermiteResult hr = hnf(g);
  const auto coords = member_coords(l, v);
  for (std::size_t i = 0; i < hr.rank; ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) n[j] += (*coords)[i] * hr.u(i, j);
  return n;
}

}  // namespace

GammaDecomposition group_decomposition_mod_gamma(const TorusPoint& p, const GammaGroup& gamma) {
  const std::size_t n = p.ambient();
  if (gamma.generators.size() != n) throw DomainError("gamma must list generators per coordinate");
  std::vector<CycloRational> all = p.coords;
  for (const auto& gs : gamma.generators)
    for (const auto& g : gs) {
      if (g.is_torsion()) throw DomainError("gamma generators must be non-torsion");
      all.push_back(g);
    }
  const auto primes = prime_support(all);

  GammaDecomposition out;
  TorusPoint rest;
  std::vector<IntVector> gamma_rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IntVector> gens;
    for (const auto& g : gamma.generators[i]) gens.push_back(exponent_vector(g, primes));
    IntVector ni = closest_combination(gens, exponent_vector(p[i], primes));
    CycloRational x = p[i];
    for (std::size_t l = 0; l < ni.size(); ++l) x = x * gamma.generators[i][l].pow(-ni[l]);
    rest.coords.push_back(x);
    out.gamma_exponents.push_back(std::move(ni));
    gamma_rows.insert(gamma_rows.end(), gens.begin(), gens.end());
  }
  out.residual = decompose_over(rest, primes);
  const std::size_t gamma_rank = Lattice::span(primes.size(), gamma_rows).rank();
  auto joint = gamma_rows;
  joint.insert(joint.end(), out.residual.generator_exponents.begin(),
               out.residual.generator_exponents.end());
  out.residual_independent =
      Lattice::span(primes.size(), joint).rank() == gamma_rank + out.residual.rank();
  // Report the residual over its own primes only.
  out.residual = group_decomposition(rest);
  return out;
}

}  // namespace torus
