#include "torus/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "torus/curve.hpp"
#include "torus/error.hpp"

namespace torus {

PolyMap::PolyMap(RatPoly f) : f_(std::move(f)) {
  if (f_.degree() < 2) throw DomainError("a polynomial map needs degree at least 2");
}

RatPoly PolyMap::iterate(unsigned m) const {
  if (m == 0) throw DomainError("iterate count must be positive");
  RatPoly g = f_;
  for (unsigned i = 1; i < m; ++i) g = f_.compose(g);
  return g;
}

PolyMap parse_polymap(const std::string& text) {
  const RatFunc f = parse_ratfunc(text, "x");
  if (!f.is_polynomial()) throw DomainError("'" + text + "' is not a polynomial");
  return PolyMap(f.num() * RatPoly::constant(1 / f.den().leading()));
}

double weil_height(const Rat& q) {
  if (q == 0) return 0.0;
  return std::max(log_abs(q.get_num()), log_abs(q.get_den()));
}

namespace {

double log_rat_abs(const Rat& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

Int lcm_den(const std::vector<Rat>& c, std::size_t upto) {
  Int l = 1;
  for (std::size_t i = 0; i < upto; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].get_den_mpz_t());
  return l;
}

std::size_t decimal_digits(const Rat& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 10), mpz_sizeinbase(q.get_den_mpz_t(), 10));
}

Rat step(const PolyMap& f, const Rat& x, std::size_t digit_cap) {
  Rat y = f(x);
  if (decimal_digits(y) > digit_cap)
    throw DomainError("orbit iterate exceeds " + std::to_string(digit_cap) + " digits");
  return y;
}

}  // namespace

double height_constant(const PolyMap& f) {
  const auto& c = f.poly().coeffs();
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const double dd = static_cast<double>(d);
  const Rat& lead = c[d];

  // upper: clear denominators, f = F / D
  const Int den = lcm_den(c, d + 1);
  Int big = den;
  for (const auto& ci : c) {
    Int fi = abs(Int(ci * den));
    if (fi > big) big = fi;
  }
  const double upper = std::log(dd + 1) + log_abs(big);

  // lower: archimedean place plus the primes of the lower denominators and of
  // the leading numerator
  Rat tail = 0;
  for (std::size_t i = 0; i < d; ++i) tail += abs(c[i]);
  const Rat r = std::max(Rat(1), Rat(2 * tail / abs(lead)));
  const double arch =
      std::max({0.0, dd * log_rat_abs(r), std::log(2.0) - log_rat_abs(abs(lead))});
  const double lead_num = log_abs(lead.get_num());
  const double finite = dd * (log_abs(lcm_den(c, d)) + lead_num) + lead_num;
  const double lower = arch + finite;

  // slack for floating point rounding
  return std::max(upper, lower) * (1 + 1e-12) + 1e-12;
}

CanonicalHeightEstimate canonical_height(const PolyMap& f, const Rat& a, double target_err,
                                         std::size_t digit_cap) {
  if (!(target_err > 0)) throw DomainError("target error must be positive");
  CanonicalHeightEstimate est;
  est.constant = height_constant(f);
  const double d = static_cast<double>(f.degree());
  double scale = 1;  // d^k
  while (est.constant / ((d - 1) * scale) > target_err) {
    scale *= d;
    ++est.iterations;
  }
  Rat x = a;
  for (unsigned k = 0; k < est.iterations; ++k) x = step(f, x, digit_cap);
  est.value = weil_height(x) / scale;
  est.error_bound = est.constant / ((d - 1) * scale);
  return est;
}

std::optional<Periodicity> is_periodic(const PolyMap& f, const Rat& a, unsigned max_iter,
                                       std::size_t digit_cap) {
  const double escape = height_constant(f) / static_cast<double>(f.degree() - 1);
  std::map<Rat, unsigned> seen;
  Rat x = a;
  for (unsigned i = 0; i <= max_iter; ++i) {
    const auto [it, fresh] = seen.emplace(x, i);
    if (!fresh) return Periodicity{it->second, i - it->second};
    if (weil_height(x) > escape + 1e-9) return std::nullopt;
    if (i < max_iter) x = step(f, x, digit_cap);
  }
  return std::nullopt;
}

namespace {

// Rational r with r^k = c, if any; the non-negative one when k is even.
std::optional<Rat> rational_root(const Rat& c, unsigned long k) {
  if (c == 0) return Rat(0);
  if (c < 0 && k % 2 == 0) return std::nullopt;
  Int n = abs(c.get_num()), dn = c.get_den();
  Int rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), dn.get_mpz_t(), k)) return std::nullopt;
  Rat r(rn, rd);
  r.canonicalize();
  return c < 0 ? Rat(-r) : r;
}

Rat pow_rat(const Rat& q, long k) {
  Rat base = k < 0 ? Rat(1 / q) : q;
  Rat out = 1;
  for (long i = 0; i < std::labs(k); ++i) out *= base;
  return out;
}

bool poly_less(const RatPoly& a, const RatPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = ca.size(); i-- > 0;)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return false;
}

// g of degree e with F o g = g o F, one per admissible leading coefficient.
std::vector<RatPoly> commuting_of_degree(const RatPoly& big_f, long e) {
  const long d = big_f.degree();
  const Rat a = big_f.leading();
  const Rat c = pow_rat(a, e - 1);
  std::vector<Rat> leads;
  if (const auto r = rational_root(c, static_cast<unsigned long>(d - 1))) {
    leads.push_back(*r);
    if ((d - 1) % 2 == 0 && *r != 0) leads.push_back(-*r);
  }
  std::vector<RatPoly> out;
  for (const Rat& b : leads) {
    std::vector<Rat> g(static_cast<std::size_t>(e) + 1, Rat(0));
    g.back() = b;
    auto residual = [&](const std::vector<Rat>& gc, long t) {
      const RatPoly gp(gc);
      return (big_f.compose(gp) - gp.compose(big_f)).coeff(static_cast<std::size_t>(t));
    };
    bool ok = true;
    for (long j = 1; j <= e && ok; ++j) {
      const auto idx = static_cast<std::size_t>(e - j);
      const long t = d * e - j;
      g[idx] = 0;
      const Rat r0 = residual(g, t);
      g[idx] = 1;
      const Rat slope = residual(g, t) - r0;
      if (slope == 0) {
        ok = false;
        break;
      }
      g[idx] = -r0 / slope;
    }
    if (!ok) continue;
    const RatPoly gp(g);
    if (big_f.compose(gp) == gp.compose(big_f)) out.push_back(gp);
  }
  return out;
}

}  // namespace

std::vector<RatPoly> commuting_polys(const PolyMap& f, long deg_bound, unsigned iterate_bound) {
  if (deg_bound < 1) throw DomainError("degree bound must be at least 1");
  if (iterate_bound < 1) throw DomainError("iterate bound must be at least 1");
  std::vector<RatPoly> out;
  RatPoly big_f = f.poly();
  for (unsigned m = 1; m <= iterate_bound; ++m) {
    if (m > 1) big_f = f.poly().compose(big_f);
    for (long e = 1; e <= deg_bound; ++e)
      for (auto& g : commuting_of_degree(big_f, e))
        if (std::none_of(out.begin(), out.end(), [&](const RatPoly& h) { return h == g; }))
          out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

const char* to_string(MapClass c) {
  switch (c) {
    case MapClass::monomial_conjugate:
      return "monomial-conjugate";
    case MapClass::chebyshev_conjugate:
      return "chebyshev-conjugate";
    case MapClass::neither:
      return "neither";
  }
  return "";
}

RatPoly chebyshev(long d) {
  RatPoly prev = RatPoly::constant(2), cur = RatPoly::x();
  if (d == 0) return prev;
  for (long i = 1; i < d; ++i) {
    RatPoly next = RatPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

struct AlphaEquations {
  std::vector<Rat> lhs;  // centered coefficients
  std::vector<Rat> rhs;  // target coefficients
};

// Does some alpha with alpha^2 = q satisfy lhs_i alpha^(1-i) = rhs_i for all i?
// For irrational alpha only even powers are rational, so odd-power equations
// must read 0 = 0.
std::optional<std::optional<Rat>> solve_alpha(const AlphaEquations& eq, const Rat& q) {
  const std::size_t n = eq.lhs.size();
  if (q == 0) return std::nullopt;
  if (const auto r = rational_root(q, 2)) {
    for (const Rat& alpha : {*r, Rat(-*r)}) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        ok = eq.lhs[i] * pow_rat(alpha, 1 - static_cast<long>(i)) == eq.rhs[i];
      if (ok) return std::optional<Rat>(alpha);
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const long k = 1 - static_cast<long>(i);
    if (k % 2 != 0) {
      if (eq.lhs[i] != 0 || eq.rhs[i] != 0) return std::nullopt;
    } else if (eq.lhs[i] * pow_rat(q, k / 2) != eq.rhs[i]) {
      return std::nullopt;
    }
  }
  return std::optional<Rat>();
}

}  // namespace

Classification chebyshev_or_monomial(const PolyMap& f) {
  const long d = f.degree();
  const auto& a = f.poly().coeffs();
  const Rat shift = a[d - 1] / (Rat(d) * a[d]);
  // f~(x) = f(x - shift) + shift has no x^(d-1) term
  const RatPoly centered = f.poly().compose(RatPoly::x() - RatPoly::constant(shift)) +
                           RatPoly::constant(shift);
  std::vector<Rat> ct(static_cast<std::size_t>(d) + 1);
  for (long i = 0; i <= d; ++i) ct[i] = centered.coeff(static_cast<std::size_t>(i));
  const Rat lead = ct[d];

  Classification out;
  AffineConjugacy sigma;
  sigma.shift = shift;
  sigma.alpha_power = d - 1;

  if (std::all_of(ct.begin(), ct.end() - 2, [](const Rat& c) { return c == 0; })) {
    out.kind = MapClass::monomial_conjugate;
    sigma.alpha_power_value = lead;
    sigma.alpha = rational_root(lead, static_cast<unsigned long>(d - 1));
    sigma.target = RatPoly::monomial(1, static_cast<std::size_t>(d));
    out.sigma = sigma;
    return out;
  }
  if (ct[d - 2] == 0) return out;
  const RatPoly t = chebyshev(d);
  // alpha^2 from the x^d and x^(d-2) equations
  const Rat q = -Rat(d) * lead / ct[d - 2];
  for (int s : {1, -1}) {
    AlphaEquations eq;
    eq.lhs = ct;
    for (long i = 0; i <= d; ++i) eq.rhs.push_back(Rat(s) * t.coeff(static_cast<std::size_t>(i)));
    const auto alpha = solve_alpha(eq, q);
    if (!alpha) continue;
    out.kind = MapClass::chebyshev_conjugate;
    sigma.alpha_power_value = Rat(s) * lead;
    sigma.alpha = *alpha;
    sigma.alpha_squared = q;
    sigma.target = t * RatPoly::constant(s);
    out.sigma = sigma;
    return out;
  }
  return out;
}

namespace {

// sum of c_ij x^i y^j with the given substitutions
RatPoly restrict_curve(const LaurentPoly& c, const RatPoly& x, const RatPoly& y) {
  RatPoly out;
  for (const auto& [e, coeff] : c.terms())
    out = out + x.pow(static_cast<unsigned>(e[0])) * y.pow(static_cast<unsigned>(e[1])) *
                    RatPoly::constant(coeff);
  return out;
}

}  // namespace

PeriodicIntersectionReport curve_periodic_intersection(const LaurentPoly& c, const PolyMap& f,
                                                       long deg_bound, unsigned iterate_bound) {
  if (c.ambient() != 2) throw DomainError("the curve must be given in two variables");
  for (const auto& [e, coeff] : c.terms())
    if (e[0] < 0 || e[1] < 0) throw DomainError("the curve must be a polynomial in x and y");
  if (chebyshev_or_monomial(f).kind != MapClass::neither)
    throw DomainError("map is conjugate to a monomial or Chebyshev polynomial");

  PeriodicIntersectionReport rep;
  auto record = [&](std::vector<PeriodicCurvePoint>& pts, const Rat& x, const Rat& y) {
    PeriodicCurvePoint p{x, y, std::max(weil_height(x), weil_height(y))};
    rep.max_point_height = std::max(rep.max_point_height, p.height);
    pts.push_back(p);
  };

  for (const auto& g : commuting_polys(f, deg_bound, iterate_bound)) {
    GraphIntersection gi;
    gi.g = g;
    const RatPoly p = restrict_curve(c, RatPoly::x(), g);
    if (p.is_zero()) {
      gi.contained = true;
    } else {
      long found = 0;
      for (const auto& r : rational_roots(p)) {
        record(gi.points, r.value, g.eval(r.value));
        found += r.multiplicity;
      }
      gi.residual = p.degree() - found;
    }
    rep.graphs.push_back(std::move(gi));
  }

  std::set<Rat> periodic;
  for (unsigned m = 1; m <= iterate_bound; ++m)
    for (const auto& r : rational_roots(f.iterate(m) - RatPoly::x())) periodic.insert(r.value);
  for (const Rat& z : periodic) {
    rep.periodic.push_back(z);
    rep.max_periodic_height = std::max(rep.max_periodic_height, weil_height(z));
    VerticalIntersection vi;
    vi.zeta = z;
    const RatPoly p = restrict_curve(c, RatPoly::constant(z), RatPoly::x());
    if (p.is_zero()) {
      vi.contained = true;
    } else {
      long found = 0;
      for (const auto& r : rational_roots(p)) {
        record(vi.points, z, r.value);
        found += r.multiplicity;
      }
      vi.residual = p.degree() - found;
    }
    rep.verticals.push_back(std::move(vi));
  }
  return rep;
}

bool check_semiconjugacy(const RatPoly& f, const RatPoly& p, const RatPoly& q) {
  return f.compose(p) == p.compose(q);
}

}  // namespace torus
