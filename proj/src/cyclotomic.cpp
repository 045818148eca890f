#include "torus/cyclotomic.hpp"

#include <numeric>

#include "torus/error.hpp"

namespace torus {

namespace {

std::uint64_t to_u64(const Int& n) {
  if (!n.fits_ulong_p()) throw DomainError("root of unity order too large");
  return n.get_ui();
}

}  // namespace

CyclotomicField::CyclotomicField(std::uint64_t order)
    : order_(order), modulus_(&cyclotomic_polynomial(order)) {}

RatPoly CyclotomicField::reduce(const RatPoly& a) const {
  if (a.degree() < modulus_->degree()) return a;
  return divmod(a, *modulus_).second;
}

RatPoly CyclotomicField::element(const Rat& angle, const Rat& coeff) const {
  const Rat scaled = angle * Rat(Int(static_cast<unsigned long>(order_)));
  if (scaled.get_den() != 1) throw DomainError("root of unity outside the field");
  Int e = scaled.get_num() % Int(static_cast<unsigned long>(order_));
  if (e < 0) e += static_cast<unsigned long>(order_);
  return reduce(RatPoly::monomial(coeff, e.get_ui()));
}

RatPoly CyclotomicField::element(const CycloSum& sum) const {
  std::vector<Rat> dense(order_);
  for (const auto& [angle, coeff] : sum) {
    const Rat scaled = angle * Rat(Int(static_cast<unsigned long>(order_)));
    if (scaled.get_den() != 1) throw DomainError("root of unity outside the field");
    dense[Int(scaled.get_num() % Int(static_cast<unsigned long>(order_))).get_ui()] += coeff;
  }
  return reduce(RatPoly(std::move(dense)));
}

RatPoly CyclotomicField::element(const CycloRational& c) const {
  return element(c.angle(), c.rational_part());
}

RatPoly CyclotomicField::conjugate(const RatPoly& a, std::uint64_t k) const {
  std::vector<Rat> dense(order_);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) dense[(i * k) % order_] += a.coeffs()[i];
  return reduce(RatPoly(std::move(dense)));
}

RatPoly CyclotomicField::lift(const RatPoly& a, std::uint64_t from_order) const {
  if (order_ % from_order != 0) throw DomainError("field is not a subfield");
  return conjugate(a, order_ / from_order);
}

std::uint64_t sum_order(const CycloSum& sum) {
  std::uint64_t n = 1;
  for (const auto& [angle, coeff] : sum)
    if (coeff != 0) n = std::lcm(n, to_u64(angle.get_den()));
  return n;
}

std::uint64_t torsion_order_u64(const CycloRational& c) { return to_u64(c.torsion_order()); }

bool is_zero(const CycloSum& sum) {
  return CyclotomicField(sum_order(sum)).element(sum).is_zero();
}

namespace {

using FieldPoly = std::vector<RatPoly>;  // coefficients in t, low to high

FieldPoly multiply(const CyclotomicField& k, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  for (auto& x : c) x = k.reduce(x);
  return c;
}

// Divides f by (t - alpha) when alpha is a root; returns false otherwise.
bool deflate(const CyclotomicField& k, FieldPoly& f, const RatPoly& alpha) {
  const std::size_t d = f.size() - 1;
  FieldPoly q(d);
  RatPoly carry;
  for (std::size_t i = d; i-- > 0;) {
    carry = k.reduce(f[i + 1] + k.mul(carry, alpha));
    q[i] = carry;
  }
  if (!k.reduce(f[0] + k.mul(carry, alpha)).is_zero()) return false;
  f = std::move(q);
  return true;
}

}  // namespace

ModelRootReport cyclo_poly_roots(const std::vector<CycloSum>& coeffs, std::uint64_t trial_bound) {
  std::uint64_t n = 1;
  for (const auto& c : coeffs) n = std::lcm(n, sum_order(c));
  const CyclotomicField field(n);
  FieldPoly f;
  for (const auto& c : coeffs) f.push_back(field.element(c));
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  if (f.empty()) throw DomainError("root search on the zero polynomial");

  ModelRootReport rep;
  while (f.front().is_zero()) {
    f.erase(f.begin());
    ++rep.zero_multiplicity;
  }

  bool rational = true;
  for (const auto& c : f) rational = rational && c.degree() <= 0;
  if (rational) {
    std::vector<Rat> q;
    for (const auto& c : f) q.push_back(c.coeff(0));
    ModelRootReport inner = model_roots(RatPoly(std::move(q)), trial_bound);
    inner.zero_multiplicity = rep.zero_multiplicity;
    return inner;
  }

  // Norm to Q: product of the conjugates over (Z/N)^*.
  FieldPoly norm{RatPoly::constant(1)};
  for (std::uint64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    FieldPoly conj;
    for (const auto& c : f) conj.push_back(field.conjugate(c, a));
    norm = multiply(field, norm, conj);
  }
  std::vector<Rat> q;
  for (const auto& c : norm) {
    if (c.degree() > 0) throw DomainError("norm computation left the rationals");
    q.push_back(c.coeff(0));
  }
  const ModelRootReport candidates = model_roots(RatPoly(std::move(q)), trial_bound);

  std::size_t found = 0;
  for (const auto& cand : candidates.roots) {
    const std::uint64_t l = std::lcm(n, torsion_order_u64(cand.root));
    const CyclotomicField big(l);
    FieldPoly g;
    for (const auto& c : f) g.push_back(big.lift(c, n));
    const RatPoly alpha = big.element(cand.root);
    unsigned mult = 0;
    while (g.size() > 1 && deflate(big, g, alpha)) ++mult;
    if (mult == 0) continue;
    rep.roots.push_back({cand.root, mult});
    found += mult;
  }
  rep.residual_degree = f.size() - 1 - found;
  return rep;
}

}  // namespace torus
