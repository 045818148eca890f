#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace torus {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

/// Prime factorization of |n| by trial division up to `bound`.  A cofactor left
/// after trial division is accepted as prime only when it is below bound^2;
/// anything else throws UnfactorableError.
std::map<Int, long> factor_integer(const Int& n, std::uint64_t bound = kDefaultTrialBound);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Int> divisors(const Int& n, std::uint64_t bound = kDefaultTrialBound);

/// Natural log of |n| for n != 0, safe for numbers far beyond double range.
double log_abs(const Int& n);

Int gcd_of(const IntVector& v);

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t);

/// floor(q + 1/2)
Int round_nearest(const Rat& q);

Int floor_div(const Int& a, const Int& b);

/// Euler phi for small arguments.
std::uint64_t euler_phi(std::uint64_t m);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

/// Parses a decimal integer (optional sign).  Throws ParseError.
Int parse_int(const std::string& text);

Int dot(const IntVector& a, const IntVector& b);
Int max_abs(const IntVector& v);

}  // namespace torus
