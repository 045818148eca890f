#include "torus/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "expr_parser.hpp"
#include "torus/cyclotomic.hpp"
#include "torus/error.hpp"

namespace torus {

namespace {

Exponent padded(const Exponent& e, std::size_t n) {
  Exponent out = e;
  out.resize(n, 0);
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t ambient, const Rat& c) {
  LaurentPoly p(ambient);
  p.add(Exponent(ambient, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rat& c) {
  LaurentPoly p(e.size());
  p.add(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t ambient, std::size_t index) {
  Exponent e(ambient, 0);
  e.at(index) = 1;
  return monomial(e, Rat(1));
}

void LaurentPoly::add(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  Rat& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

LaurentPoly LaurentPoly::with_ambient(std::size_t n) const {
  if (n < n_) throw DomainError("cannot shrink the ambient dimension");
  LaurentPoly p(n);
  for (const auto& [e, c] : terms_) p.add(padded(e, n), c);
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::max(a.n_, b.n_);
  LaurentPoly p = a.with_ambient(n);
  for (const auto& [e, c] : b.terms_) p.add(padded(e, n), c);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p(a.n_);
  for (const auto& [e, c] : a.terms_) p.add(e, -c);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::max(a.n_, b.n_);
  LaurentPoly p(n);
  for (const auto& [ea, ca] : a.terms_) {
    const Exponent pa = padded(ea, n);
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = padded(eb, n);
      for (std::size_t i = 0; i < n; ++i) e[i] += pa[i];
      p.add(e, ca * cb);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::pow(long k) const {
  if (k < 0) {
    if (!is_monomial()) throw DomainError("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponent inv = e;
    for (auto& x : inv) x = -x;
    return monomial(inv, 1 / c).pow(-k);
  }
  LaurentPoly result = constant(n_, Rat(1));
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

CycloSum LaurentPoly::evaluate(const TorusPoint& p) const {
  if (p.ambient() < n_) throw DomainError("point has too few coordinates");
  CycloSum sum;
  for (const auto& [e, c] : terms_) {
    IntVector a(p.ambient(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) a[i] = e[i];
    add_term(sum, p.monomial(a), c);
  }
  return sum;
}

bool LaurentPoly::vanishes_at(const TorusPoint& p) const { return torus::is_zero(evaluate(p)); }

std::map<Exponent, CycloSum> LaurentPoly::substitute(const IntMatrix& e,
                                                     const TorusPoint& shift) const {
  if (e.rows() < n_ || shift.ambient() != e.rows())
    throw DomainError("substitution does not match the ambient dimension");
  const std::size_t k = e.cols();
  std::map<Exponent, CycloSum> out;
  for (const auto& [a, c] : terms_) {
    Exponent te(k, 0);
    IntVector full(e.rows(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      full[i] = a[i];
      for (std::size_t j = 0; j < k; ++j) te[j] += a[i] * e(i, j).get_si();
    }
    CycloSum& slot = out[te];
    add_term(slot, shift.monomial(full), c);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (torus::is_zero(it->second))
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest total degree first, then reverse lexicographic
  std::vector<std::pair<Exponent, Rat>> items(terms_.rbegin(), terms_.rend());
  for (const auto& [e, c] : items) {
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += n_ <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

bool LaurentSystem::vanishes_at(const TorusPoint& p) const {
  return std::all_of(equations.begin(), equations.end(),
                     [&](const LaurentPoly& f) { return f.vanishes_at(p); });
}

std::string LaurentSystem::to_string() const {
  std::string out;
  for (const auto& f : equations) out += (out.empty() ? "" : "; ") + f.to_string();
  return out;
}

namespace {

struct LaurentRing {
  LaurentPoly p;
  static LaurentRing constant(const Rat& c) { return {LaurentPoly::constant(0, c)}; }
  friend LaurentRing operator+(const LaurentRing& a, const LaurentRing& b) { return {a.p + b.p}; }
  friend LaurentRing operator-(const LaurentRing& a, const LaurentRing& b) { return {a.p - b.p}; }
  friend LaurentRing operator*(const LaurentRing& a, const LaurentRing& b) { return {a.p * b.p}; }
  static LaurentRing divide(const LaurentRing& a, const LaurentRing& b) {
    if (b.p.is_zero()) throw ParseError("division by zero");
    if (!b.p.is_monomial()) throw ParseError("division by a non-monomial Laurent polynomial");
    return {a.p * b.p.pow(-1)};
  }
  static LaurentRing power(const LaurentRing& a, long k) {
    if (k < 0 && !a.p.is_monomial()) throw ParseError("negative power of a non-monomial");
    if (a.p.is_zero() && k <= 0) throw ParseError("zero to a non-positive power");
    return {a.p.pow(k)};
  }
};

std::size_t variable_index(const std::string& name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  if (name.size() >= 2 && name[0] == 'x' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(c); }) &&
      name[1] != '0' && name.size() <= 4)
    return std::stoul(name.substr(1)) - 1;
  throw ParseError("unknown variable '" + name + "'");
}

LaurentPoly parse_side(const std::string& text) {
  detail::ExprParser<LaurentRing> parser(text, [](const std::string& name) {
    const std::size_t i = variable_index(name);
    return LaurentRing{LaurentPoly::variable(i + 1, i)};
  });
  return parser.parse().p;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text, std::size_t ambient) {
  const auto sides = split(text, '=');
  if (sides.empty() || sides.size() > 2) throw ParseError("expected at most one '=' in '" + text + "'");
  LaurentPoly p = parse_side(sides[0]);
  if (sides.size() == 2) p = p - parse_side(sides[1]);
  if (ambient) {
    if (p.ambient() > ambient) throw ParseError("variable index exceeds the ambient dimension");
    p = p.with_ambient(ambient);
  }
  return p;
}

LaurentSystem parse_system(const std::string& text, std::size_t ambient) {
  LaurentSystem sys;
  std::vector<LaurentPoly> eqs;
  for (const auto& part : split(text, ';')) {
    if (part.find_first_not_of(" \t\n") == std::string::npos) continue;
    LaurentPoly p = parse_laurent(part);
    if (p.is_zero()) throw ParseError("equation '" + part + "' is identically zero");
    eqs.push_back(std::move(p));
  }
  if (eqs.empty()) throw ParseError("no equations given");
  std::size_t n = ambient;
  for (const auto& p : eqs) n = std::max(n, p.ambient());
  if (ambient && n > ambient) throw ParseError("variable index exceeds the ambient dimension");
  sys.ambient = n;
  for (auto& p : eqs) sys.equations.push_back(p.with_ambient(n));
  return sys;
}

}  // namespace torus
