#include "torus/cyclo.hpp"

#include <cctype>
#include <sstream>

#include "torus/error.hpp"

namespace torus {

namespace {

Rat reduce_angle(Rat a) {
  a.canonicalize();
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  a -= Rat(fl);
  return a;
}

}  // namespace

CycloRational CycloRational::root_of_unity(const Int& order, const Int& exp) {
  if (order <= 0) throw DomainError("root of unity order must be positive");
  return from_parts(Rat(exp, order), {});
}

CycloRational CycloRational::from_rational(const Rat& q, std::uint64_t trial_bound) {
  if (q == 0) throw DomainError("zero is not a point of the torus");
  std::map<Int, Int> primes;
  for (const auto& [p, e] : factor_integer(q.get_num(), trial_bound)) primes[p] += e;
  for (const auto& [p, e] : factor_integer(q.get_den(), trial_bound)) primes[p] -= e;
  return from_parts(q < 0 ? Rat(1, 2) : Rat(0), std::move(primes));
}

CycloRational CycloRational::from_parts(const Rat& angle, std::map<Int, Int> prime_exponents) {
  CycloRational c;
  c.angle_ = reduce_angle(angle);
  for (auto it = prime_exponents.begin(); it != prime_exponents.end();) {
    if (it->second == 0)
      it = prime_exponents.erase(it);
    else
      ++it;
  }
  c.primes_ = std::move(prime_exponents);
  return c;
}

Int CycloRational::numerator() const {
  Int n = 1;
  for (const auto& [p, e] : primes_) {
    if (e > 0) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e.get_ui());
      n *= pe;
    }
  }
  return n;
}

Int CycloRational::denominator() const {
  Int d = 1;
  for (const auto& [p, e] : primes_) {
    if (e < 0) {
      Int pe;
      const Int ne = -e;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), ne.get_ui());
      d *= pe;
    }
  }
  return d;
}

Rat CycloRational::rational_part() const {
  Rat q(numerator(), denominator());
  q.canonicalize();
  return q;
}

Int CycloRational::exponent_of(const Int& p) const {
  const auto it = primes_.find(p);
  return it == primes_.end() ? Int(0) : it->second;
}

CycloRational CycloRational::inverse() const {
  std::map<Int, Int> primes;
  for (const auto& [p, e] : primes_) primes[p] = -e;
  return from_parts(-angle_, std::move(primes));
}

CycloRational CycloRational::pow(const Int& k) const {
  std::map<Int, Int> primes;
  if (k != 0)
    for (const auto& [p, e] : primes_) primes[p] = e * k;
  return from_parts(angle_ * Rat(k), std::move(primes));
}

CycloRational operator*(const CycloRational& a, const CycloRational& b) {
  std::map<Int, Int> primes = a.primes_;
  for (const auto& [p, e] : b.primes_) primes[p] += e;
  return CycloRational::from_parts(a.angle_ + b.angle_, std::move(primes));
}

double CycloRational::weil_height() const {
  if (primes_.empty()) return 0.0;
  return std::max(log_abs(numerator()), log_abs(denominator()));
}

std::string CycloRational::to_string() const {
  const Rat q = rational_part();
  const std::string qs = q.get_str();
  if (angle_ == 0) return qs;
  if (angle_ == Rat(1, 2)) return "-" + qs;
  std::string out = "zeta(" + torsion_order().get_str() + "," + torsion_exp().get_str() + ")";
  if (q != 1) out += "*" + qs;
  return out;
}

std::strong_ordering operator<=>(const CycloRational& a, const CycloRational& b) {
  if (a.angle_ != b.angle_) return a.angle_ < b.angle_ ? std::strong_ordering::less
                                                       : std::strong_ordering::greater;
  auto ia = a.primes_.begin();
  auto ib = b.primes_.begin();
  for (; ia != a.primes_.end() && ib != b.primes_.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      return ia->first < ib->first ? std::strong_ordering::less : std::strong_ordering::greater;
    if (ia->second != ib->second)
      return ia->second < ib->second ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
  }
  if (ia == a.primes_.end() && ib == b.primes_.end()) return std::strong_ordering::equal;
  return ia == a.primes_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

CycloRational TorusPoint::monomial(const IntVector& a) const {
  if (a.size() != coords.size()) throw DomainError("exponent vector has the wrong length");
  CycloRational out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) out = out * coords[i].pow(a[i]);
  return out;
}

TorusPoint operator*(const TorusPoint& a, const TorusPoint& b) {
  if (a.ambient() != b.ambient()) throw DomainError("points live in different tori");
  TorusPoint out;
  for (std::size_t i = 0; i < a.ambient(); ++i) out.coords.push_back(a[i] * b[i]);
  return out;
}

double TorusPoint::max_height() const {
  double h = 0.0;
  for (const auto& c : coords) h = std::max(h, c.weil_height());
  return h;
}

std::string TorusPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].to_string();
  }
  return out + ")";
}

void add_term(CycloSum& sum, const CycloRational& c, const Rat& coeff) {
  if (coeff == 0) return;
  Rat& slot = sum[c.angle()];
  slot += coeff * c.rational_part();
  if (slot == 0) sum.erase(c.angle());
}

namespace {

class CycloParser {
 public:
  CycloParser(const std::string& text, std::uint64_t bound) : s_(text), bound_(bound) {}

  CycloRational parse_single() {
    CycloRational v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  TorusPoint parse_tuple() {
    skip();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    TorusPoint p;
    p.coords.push_back(expr());
    skip();
    while (peek() == ',') {
      ++pos_;
      p.coords.push_back(expr());
      skip();
    }
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  Int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(s_.substr(start, pos_ - start));
  }
  Int signed_integer() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (peek() == '(') {
      ++pos_;
      Int v = signed_integer();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return neg ? Int(-v) : v;
    }
    Int v = integer();
    return neg ? Int(-v) : v;
  }

  CycloRational expr() {
    CycloRational v = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * factor();
      } else if (c == '/') {
        ++pos_;
        v = v / factor();
      } else {
        return v;
      }
    }
  }

  CycloRational factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return CycloRational::root_of_unity(2, 1) * factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    CycloRational base = atom();
    if (peek() == '^') {
      ++pos_;
      base = base.pow(signed_integer());
    }
    return base;
  }

  CycloRational atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      CycloRational v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (s_.compare(pos_, 4, "zeta") == 0) {
      pos_ += 4;
      if (peek() != '(') fail("expected '(' after zeta");
      ++pos_;
      const Int order = integer();
      Int exp = 1;
      if (peek() == ',') {
        ++pos_;
        exp = signed_integer();
      }
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      if (order == 0) fail("zeta order must be positive");
      return CycloRational::root_of_unity(order, exp);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Int n = integer();
      if (n == 0) throw DomainError("zero is not a point of the torus");
      return CycloRational::from_rational(Rat(n), bound_);
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::uint64_t bound_;
};

}  // namespace

CycloRational parse_cyclo(const std::string& text, std::uint64_t trial_bound) {
  return CycloParser(text, trial_bound).parse_single();
}

TorusPoint parse_point(const std::string& text, std::uint64_t trial_bound) {
  return CycloParser(text, trial_bound).parse_tuple();
}

}  // namespace torus
