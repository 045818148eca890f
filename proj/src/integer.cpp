#include "torus/integer.hpp"

#include <algorithm>
#include <cmath>

#include "torus/error.hpp"

namespace torus {

namespace {

void strip_small_factors(Int& n, std::uint64_t bound, std::map<Int, long>& out) {
  if (n.fits_ulong_p()) {
    unsigned long m = n.get_ui();
    for (unsigned long p = 2; p <= bound && p * p <= m; p += (p == 2 ? 1 : 2)) {
      long e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e > 0) out[Int(p)] += e;
    }
    n = m;
    return;
  }
  Int p = 2;
  while (p <= bound && p * p <= n) {
    long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out[p] += e;
    p += (p == 2 ? 1 : 2);
  }
}

}  // namespace

std::map<Int, long> factor_integer(const Int& n, std::uint64_t bound) {
  if (n == 0) throw DomainError("cannot factor zero");
  std::map<Int, long> out;
  Int m = abs(n);
  strip_small_factors(m, bound, out);
  if (m > 1) {
    Int b = Int(bound) + 1;
    // every prime <= bound is gone, so a composite cofactor is >= (bound+1)^2
    if (m < b * b) {
      out[m] += 1;
    } else {
      throw UnfactorableError("cofactor " + m.get_str() + " exceeds trial-division bound " +
                              std::to_string(bound));
    }
  }
  return out;
}

std::vector<Int> divisors(const Int& n, std::uint64_t bound) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : factor_integer(n, bound)) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double log_abs(const Int& n) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int round_nearest(const Rat& q) {
  Rat shifted = q + Rat(1, 2);
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

Int floor_div(const Int& a, const Int& b) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string body = text.substr(i, j - i);
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  const std::size_t digits_from = (!body.empty() && body[0] == '-') ? 1 : 0;
  if (body.size() == digits_from ||
      !std::all_of(body.begin() + static_cast<long>(digits_from), body.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    throw ParseError("not an integer: '" + text + "'");
  }
  return Int(body);
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int max_abs(const IntVector& v) {
  Int m = 0;
  for (const auto& x : v) {
    if (abs(x) > m) m = abs(x);
  }
  return m;
}

}  // namespace torus
