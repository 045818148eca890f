#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "torus/error.hpp"
#include "torus/lattice.hpp"
#include "torus/matrix.hpp"

using namespace torus;
using torus::testing::random_lattice;
using torus::testing::random_unimodular;

namespace {

// Product-ratio ceiling for delta = 0.99 LLL on the desk-scale suite
// (rank <= 4, ambient <= 6, entries <= 20).  Largest value seen is about 1.6.
constexpr double kReducedRatioCeiling = 2.0;
// Ceiling on max_j |lambda_j| ||b_j|| / ||x|| over the same suite.
constexpr double kCoefficientRatioCeiling = 2.0;

bool is_diagonal_chain(const SmithResult& s) {
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j && s.d(i, j) != 0) return false;
  for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
    if (!mpz_divisible_p(s.invariant_factors[i].get_mpz_t(),
                         s.invariant_factors[i - 1].get_mpz_t()))
      return false;
  return true;
}

}  // namespace

TEST_CASE("hnf examples") {
  const auto id = hnf(IntMatrix::identity(2));
  CHECK(id.h == IntMatrix::identity(2));
  CHECK(id.u == IntMatrix::identity(2));

  const IntMatrix row{{2, 4}};
  const auto r = hnf(row);
  CHECK(r.h == row);
  CHECK(r.u == IntMatrix{{1}});

  const IntMatrix m{{4, 6}, {2, 2}};
  const auto h = hnf(m);
  CHECK(h.h == h.u * m);
  CHECK(abs(determinant(h.u)) == 1);
  CHECK(h.h == IntMatrix{{2, 0}, {0, 2}});
}

TEST_CASE("hnf is canonical under unimodular row changes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 3, n = 4;
    IntMatrix m(r, n);
    for (std::size_t i = 0; i < r; ++i) m.set_row(i, torus::testing::random_vector(rng, n, 9));
    const auto a = hnf(m);
    const auto b = hnf(random_unimodular(rng, r) * m);
    CHECK(a.h == b.h);
    CHECK(a.h == a.u * m);
    CHECK(abs(determinant(a.u)) == 1);
  }
}

TEST_CASE("snf examples") {
  const IntMatrix m{{2, 0}, {0, 3}};
  const auto s = snf(m);
  CHECK(s.invariant_factors == std::vector<Int>{1, 6});
  CHECK(s.d == s.u * m * s.v);

  CHECK(snf(IntMatrix::identity(3)).invariant_factors == std::vector<Int>{1, 1, 1});
  CHECK(snf(IntMatrix{{2, 0}, {0, 2}}).invariant_factors == std::vector<Int>{2, 2});
}

TEST_CASE("snf decomposition holds on random rectangular matrices") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(torus::testing::uniform(rng, 1, 4));
    const auto c = static_cast<std::size_t>(torus::testing::uniform(rng, 1, 5));
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) m.set_row(i, torus::testing::random_vector(rng, c, 12));
    const auto s = snf(m);
    CHECK(s.d == s.u * m * s.v);
    CHECK(s.v * s.v_inv == IntMatrix::identity(c));
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(is_diagonal_chain(s));
    CHECK(s.invariant_factors.size() == rank_of(m));
  }
}

TEST_CASE("minors_gcd") {
  // minors of {(1,2,3),(0,1,1)}: det(1 2;0 1)=1, det(1 3;0 1)=1, det(2 3;1 1)=-1
  CHECK(minors_gcd(IntMatrix{{1, 2, 3}, {0, 1, 1}}, 2) == 1);
  CHECK(minors_gcd(IntMatrix{{2, 0}, {0, 2}}, 2) == 4);
  CHECK(minors_gcd(IntMatrix{{1, 0}}, 1) == 1);
  CHECK(minors_gcd(IntMatrix{{2, 4}, {1, 2}}, 2) == 0);
  CHECK_THROWS_AS(minors_gcd(IntMatrix{{1, 0}}, 2), DomainError);
}

TEST_CASE("saturate") {
  const auto l = Lattice::span(2, {{2, 4}});
  const auto s = saturate(l);
  CHECK(s == Lattice::span(2, {{1, 2}}));
  // brute force: integer vectors of the box on the line Q(2,4) are exactly k(1,2)
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      const bool on_line = (a * 4 - b * 2) == 0;
      CHECK(on_line == contains(s, {a, b}));
    }
  CHECK(gram_det(l).value == 4 * gram_det(s).value);  // index 2

  CHECK(saturate(Lattice::span(2, {{1, 0}})) == Lattice::span(2, {{1, 0}}));
  CHECK(saturate(Lattice(3)) == Lattice(3));
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(Lattice::span(2, {{1, 2}})));
  CHECK_FALSE(is_primitive(Lattice::span(2, {{2, 4}})));
  CHECK(is_primitive(Lattice::full(2)));
  CHECK(is_primitive(Lattice(2)));
}

TEST_CASE("orthogonal") {
  const auto o = orthogonal(Lattice::span(3, {{1, 1, 1}}));
  CHECK(o.rank() == 2);
  CHECK(contains(o, {1, -1, 0}));
  CHECK(contains(o, {0, 1, -1}));
  CHECK(orthogonal(Lattice::full(2)).rank() == 0);
  CHECK(orthogonal(Lattice::span(2, {{1, 2}})) == Lattice::span(2, {{2, -1}}));
}

TEST_CASE("reduced_basis") {
  const auto id = reduced_basis(Lattice::full(2));
  CHECK(id.product_ratio == doctest::Approx(1.0));
  CHECK(id.basis.size() == 2);

  const auto skew = reduced_basis(Lattice::span(2, {{1, 0}, {100, 1}}));
  for (const auto& b : skew.basis) CHECK(max_abs(b) <= 1);
  CHECK(skew.product_ratio <= 2.0);

  const auto single = reduced_basis(Lattice::span(2, {{2, 4}}));
  CHECK(single.basis == std::vector<IntVector>{{2, 4}});

  // a genuinely skew input basis, bypassing canonicalisation
  std::vector<IntVector> b{{1, 0}, {100, 1}};
  lll_reduce(b);
  for (const auto& v : b) CHECK(max_abs(v) <= 1);
  CHECK(Lattice::span(2, b) == Lattice::full(2));

  CHECK_THROWS_AS(reduced_basis(Lattice(2)), DomainError);
}

TEST_CASE("gram_det") {
  CHECK(gram_det(Lattice::full(2)).value == 1);
  CHECK(gram_det(Lattice::span(2, {{1, 2}})).value == 5);
  CHECK(gram_det(Lattice::span(2, {{2, 4}})).value == 20);
}

TEST_CASE("contains and member_coords") {
  const auto l = Lattice::span(2, {{1, 2}});
  CHECK(member_coords(l, {2, 4}) == IntVector{2});
  CHECK_FALSE(member_coords(l, {1, 1}).has_value());
  CHECK_FALSE(contains(Lattice::span(2, {{2, 0}, {0, 2}}), {1, 1}));
  CHECK_THROWS_AS(contains(l, {1, 2, 3}), DomainError);
}

TEST_CASE("lattice properties on random inputs") {
  std::mt19937_64 rng(2024);
  double worst_ratio = 1.0;
  double worst_coeff = 0.0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto n = static_cast<std::size_t>(torus::testing::uniform(rng, 1, 6));
    const auto l = random_lattice(rng, n, std::min<std::size_t>(n, 4), 20);
    const auto s = saturate(l);

    CHECK(saturate(s) == s);
    CHECK(s.rank() == l.rank());
    CHECK(is_sublattice(l, s));
    CHECK(is_primitive(s));
    CHECK(is_primitive(l) == (s == l));

    const auto o = orthogonal(l);
    CHECK(o.rank() == n - l.rank());
    CHECK(is_primitive(o));
    for (const auto& u : o.basis_vectors())
      for (const auto& b : l.basis_vectors()) CHECK(dot(u, b) == 0);
    CHECK(orthogonal(o) == s);

    if (l.rank() == 0) continue;
    const auto basis = l.basis_vectors();
    const IntMatrix changed = random_unimodular(rng, l.rank()) * l.basis();
    CHECK(gram_det(changed.row_list()) == gram_det(l));

    const auto red = reduced_basis(l);
    CHECK(Lattice::span(n, red.basis) == l);
    worst_ratio = std::max(worst_ratio, red.product_ratio);
    CHECK(red.product_ratio < kReducedRatioCeiling);

    IntVector x(n);
    for (const auto& b : red.basis) {
      const long c = torus::testing::uniform(rng, -5, 5);
      for (std::size_t k = 0; k < n; ++k) x[k] += c * b[k];
    }
    if (max_abs(x) != 0) {
      const double cr = coefficient_ratio(red.basis, x);
      worst_coeff = std::max(worst_coeff, cr);
      CHECK(cr < kCoefficientRatioCeiling);
    }
  }
  MESSAGE("worst product ratio " << worst_ratio << ", worst coefficient ratio " << worst_coeff);
}

TEST_CASE("snf with a unit pivot dividing negative entries") {
  const IntMatrix m{{1, 0, -1}, {0, 1, -1}};
  const auto s = snf(m);
  CHECK(s.invariant_factors == std::vector<Int>{1, 1});
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.v * s.v_inv == IntMatrix::identity(3));
}
