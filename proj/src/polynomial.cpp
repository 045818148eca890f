#include "torus/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "torus/error.hpp"

namespace torus {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::x() { return monomial(Rat(1), 1); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatPoly RatPoly::compose(const RatPoly& g) const {
  RatPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
  return acc;
}

RatPoly RatPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return Rat(1) / leading() * *this;
}

RatPoly RatPoly::pow(unsigned k) const {
  RatPoly result = constant(1);
  RatPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::size_t RatPoly::low_order() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

RatPoly RatPoly::shift_down(std::size_t k) const {
  if (k >= c_.size()) return RatPoly();
  return RatPoly(std::vector<Rat>(c_.begin() + static_cast<long>(k), c_.end()));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) { return Rat(-1) * a; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
  std::vector<Rat> c = a.c_;
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

std::string RatPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    const bool neg = a < 0;
    const Rat mag = neg ? Rat(-a) : a;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    const bool show_coeff = (mag != 1) || i == 0;
    if (show_coeff) out += mag.get_str();
    if (i > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat lb = b.leading();
  for (long k = a.degree() - db; k >= 0; --k) {
    const Rat f = r[static_cast<std::size_t>(k + db)] / lb;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

IntVector primitive_part(const RatPoly& f) {
  if (f.is_zero()) return {};
  Int den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, Int(c.get_den()));
  IntVector out;
  for (const auto& c : f.coeffs()) out.push_back(Int(c * Rat(den)));
  Int g = gcd_of(out);
  if (f.leading() < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

RatPoly from_integers(const IntVector& c) {
  std::vector<Rat> v;
  for (const auto& x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f) {
  // Yun's algorithm
  std::vector<std::pair<RatPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  RatPoly a = f.monic();
  RatPoly b = a.derivative();
  RatPoly c = gcd(a, b);
  RatPoly w = divmod(a, c).first;
  RatPoly y = divmod(b, c).first;
  RatPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

const RatPoly& cyclotomic_polynomial(std::uint64_t m) {
  static std::mutex mu;
  static std::map<std::uint64_t, RatPoly> cache;
  if (m == 0) throw DomainError("cyclotomic polynomial of order 0");
  {
    std::lock_guard<std::mutex> lock(mu);
    const auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for every proper divisor d
  RatPoly p = RatPoly::monomial(Rat(1), m) - RatPoly::constant(1);
  for (std::uint64_t d = 1; d < m; ++d)
    if (m % d == 0) p = divmod(p, cyclotomic_polynomial(d)).first;
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(p)).first->second;
}

namespace {

// Positive integers a with a^k | n.
std::vector<Int> power_divisors(const Int& n, unsigned k, std::uint64_t bound) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : factor_integer(n, bound)) {
    const long top = e / static_cast<long>(k);
    const std::size_t base = out.size();
    Int pk = 1;
    for (long j = 1; j <= top; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// a^phi * Phi_m(b t / a)
RatPoly scaled_cyclotomic(std::uint64_t m, const Int& a, const Int& b) {
  const RatPoly& phi = cyclotomic_polynomial(m);
  const std::size_t deg = static_cast<std::size_t>(phi.degree());
  std::vector<Rat> c(deg + 1);
  Int bk = 1;
  for (std::size_t k = 0; k <= deg; ++k) {
    Int ak;
    mpz_pow_ui(ak.get_mpz_t(), a.get_mpz_t(), deg - k);
    c[k] = phi.coeff(k) * Rat(bk * ak);
    bk *= b;
  }
  return RatPoly(std::move(c));
}

bool try_divide(RatPoly& f, const RatPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) return false;
  f = std::move(q);
  return true;
}

// Shared search; `orders` restricts m (empty means every m with phi(m) <= deg).
ModelRootReport search_roots(const RatPoly& f, std::uint64_t bound, bool rational_only) {
  if (f.is_zero()) throw DomainError("root search on the zero polynomial");
  ModelRootReport rep;
  rep.zero_multiplicity = f.low_order();
  RatPoly g = f.shift_down(rep.zero_multiplicity);
  const auto max_m = [&](long deg) -> std::uint64_t {
    if (rational_only) return 2;
    return 2 * static_cast<std::uint64_t>(deg) * static_cast<std::uint64_t>(deg) + 2;
  };
  for (std::uint64_t m = 1; g.degree() >= 1 && m <= max_m(g.degree()); ++m) {
    const std::uint64_t phi = euler_phi(m);
    if (phi > static_cast<std::uint64_t>(g.degree())) continue;
    const IntVector prim = primitive_part(g);
    const auto as = power_divisors(prim.front(), static_cast<unsigned>(phi), bound);
    const auto bs = power_divisors(prim.back(), static_cast<unsigned>(phi), bound);
    for (const auto& a : as) {
      for (const auto& b : bs) {
        if (gcd(a, b) != 1) continue;
        if (phi > static_cast<std::uint64_t>(g.degree())) break;
        const RatPoly factor = scaled_cyclotomic(m, a, b);
        unsigned mult = 0;
        while (g.degree() >= factor.degree() && try_divide(g, factor)) ++mult;
        if (mult == 0) continue;
        const CycloRational scale = CycloRational::from_rational(Rat(a, b), bound);
        for (std::uint64_t j = 0; j < m; ++j) {
          if (std::gcd(j, m) != 1) continue;
          rep.roots.push_back(
              {CycloRational::root_of_unity(Int(static_cast<unsigned long>(m)),
                                            Int(static_cast<unsigned long>(j))) *
                   scale,
               mult});
        }
      }
    }
  }
  rep.residual_degree = static_cast<std::size_t>(std::max<long>(g.degree(), 0));
  rep.residual = std::move(g);
  return rep;
}

}  // namespace

ModelRootReport model_roots(const RatPoly& f, std::uint64_t trial_bound) {
  return search_roots(f, trial_bound, false);
}

std::vector<RationalRoot> rational_roots(const RatPoly& f, std::uint64_t trial_bound) {
  const ModelRootReport rep = search_roots(f, trial_bound, true);
  std::vector<RationalRoot> out;
  if (rep.zero_multiplicity) out.push_back({Rat(0), static_cast<unsigned>(rep.zero_multiplicity)});
  for (const auto& r : rep.roots) {
    Rat v = r.root.rational_part();
    if (r.root.angle() != 0) v = -v;
    out.push_back({v, r.multiplicity});
  }
  std::sort(out.begin(), out.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return out;
}

}  // namespace torus
