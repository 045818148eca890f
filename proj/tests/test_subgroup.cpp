#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "torus/subgroup.hpp"

using namespace torus;

namespace {

AlgebraicSubgroup from_rows(std::size_t n, std::vector<IntVector> rows) {
  return subgroup_from_lattice(Lattice::span(n, rows));
}

CycloRational q(long a, long b = 1) { return CycloRational::from_rational(Rat(a, b)); }
CycloRational zeta(long n, long k = 1) { return CycloRational::root_of_unity(n, k); }

// Every lattice of rank d in Z^n whose canonical basis has entries <= B, found
// by row-reducing all d x n matrices with entries in [-B, B].
std::set<std::vector<long>> brute_force_bases(std::size_t n, std::size_t d, long bound) {
  std::set<std::vector<long>> out;
  const std::size_t cells = n * d;
  std::vector<long> entries(cells, -bound);
  while (true) {
    std::vector<IntVector> rows(d, IntVector(n));
    for (std::size_t c = 0; c < cells; ++c) rows[c / n][c % n] = entries[c];
    const Lattice l = Lattice::span(n, rows);
    if (l.rank() == d && l.basis().max_abs() <= bound) {
      std::vector<long> flat;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(l.basis()(i, j).get_si());
      out.insert(flat);
    }
    std::size_t c = 0;
    while (c < cells && ++entries[c] > bound) entries[c++] = -bound;
    if (c == cells) break;
  }
  return out;
}

}  // namespace

TEST_CASE("subgroup construction examples") {
  const auto diag = from_rows(2, {{1, -1}});
  CHECK(diag.dimension() == 1);
  CHECK(diag.connected());

  const auto square = from_rows(2, {{2, 0}});
  CHECK(square.dimension() == 1);
  CHECK(square.component_count() == 2);
  CHECK_FALSE(square.connected());

  const auto finite = from_rows(2, {{2, 0}, {0, 3}});
  CHECK(finite.dimension() == 0);
  CHECK(finite.component_count() == 6);
}

TEST_CASE("connectedness examples") {
  CHECK(is_connected(from_rows(2, {{1, 2}})));
  CHECK_FALSE(is_connected(from_rows(2, {{2, 4}})));
  CHECK(is_connected(subgroup_from_lattice(Lattice(3))));
}

TEST_CASE("identity component examples") {
  CHECK(identity_component(from_rows(2, {{2, 0}})) == from_rows(2, {{1, 0}}));
  CHECK(identity_component(from_rows(2, {{2, 4}})) == from_rows(2, {{1, 2}}));
  const auto h = from_rows(3, {{1, 1, -1}});
  CHECK(identity_component(h) == h);
}

TEST_CASE("parametrize examples") {
  CHECK(parametrize(from_rows(2, {{1, -1}})).exponents == IntMatrix{{1}, {1}});
  CHECK(parametrize(from_rows(2, {{1, 1}})).exponents == IntMatrix{{1}, {-1}});
  const auto m = parametrize(from_rows(3, {{1, 1, -1}}));
  CHECK(m.parameters() == 2);
  for (std::size_t j = 0; j < 2; ++j) CHECK(dot(m.exponents.col(j), IntVector{1, 1, -1}) == 0);
  CHECK(is_primitive(Lattice::span(3, m.exponents.transpose().row_list())));
}

TEST_CASE("membership examples") {
  CHECK(membership(TorusPoint{{q(4), q(2)}}, from_rows(2, {{1, -2}})));
  CHECK_FALSE(membership(TorusPoint{{q(2), q(3)}}, from_rows(2, {{1, -1}})));
  CHECK(membership(TorusPoint{{zeta(6), zeta(6, 5)}}, from_rows(2, {{1, 1}})));
}

TEST_CASE("enumeration examples") {
  const auto small = enumerate_connected_subgroups(2, 1, 1);
  std::size_t expected = 0;
  for (std::size_t d = 1; d <= 2; ++d)
    for (const auto& flat : brute_force_bases(2, d, 1)) {
      IntMatrix b(d, 2);
      for (std::size_t c = 0; c < flat.size(); ++c) b(c / 2, c % 2) = flat[c];
      if (minors_gcd(b, d) == 1) ++expected;
    }
  CHECK(small.size() == expected);
  bool has_x = false, has_diag = false, has_trivial = false;
  for (const auto& h : small) {
    has_x |= h == from_rows(2, {{1, 0}});
    has_diag |= h == from_rows(2, {{1, -1}});
    has_trivial |= h.dimension() == 0;
  }
  CHECK(has_x);
  CHECK(has_diag);
  CHECK(has_trivial);

  const auto line = enumerate_connected_subgroups(1, 1, 5);
  REQUIRE(line.size() == 1);
  CHECK(line[0] == from_rows(1, {{1}}));

  CHECK(enumerate_connected_subgroups(2, 3, 2).empty());
}

TEST_CASE("hnf enumeration matches brute force") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long bound = 1; bound <= (n == 3 ? 1 : 2); ++bound) {
      for (std::size_t d = 0; d <= n; ++d) {
        const auto listed = enumerate_hnf_bases(n, d, bound);
        std::set<std::vector<long>> got;
        for (const auto& b : listed) {
          CHECK(Lattice::row_span(b).basis() == b);
          std::vector<long> flat;
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) flat.push_back(b(i, j).get_si());
          got.insert(flat);
        }
        CHECK(got.size() == listed.size());
        if (d > 0) CHECK(got == brute_force_bases(n, d, bound));
      }
    }
  }
}

TEST_CASE("enumeration properties") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long bound = 1; bound <= 2; ++bound) {
      const auto all = enumerate_subgroups(n, 0, bound);
      std::set<std::vector<IntVector>> seen;
      std::size_t last_rank = 0;
      for (const auto& h : all) {
        CHECK(seen.insert(h.lattice().basis_vectors()).second);
        CHECK(h.dimension() + h.lattice().rank() == n);
        CHECK(h.lattice().rank() >= last_rank);
        last_rank = h.lattice().rank();
        const bool prim = is_primitive(h.lattice());
        CHECK(h.connected() == prim);
        CHECK((h.component_count() == 1) == prim);
      }
      for (const auto& h : enumerate_connected_subgroups(n, 0, bound)) CHECK(h.connected());
    }
  }
}

TEST_CASE("coset representatives cover the components") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto l = torus::testing::random_lattice(rng, 3, 3, 4);
    const auto h = subgroup_from_lattice(l);
    const auto h0 = identity_component(h);
    const auto reps = coset_representatives(h);
    CHECK(Int(static_cast<unsigned long>(reps.size())) == h.component_count());
    CHECK(reps.front() == TorusPoint{std::vector<CycloRational>(3)});
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(membership(reps[i], h));
      for (std::size_t j = 0; j < i; ++j) {
        TorusPoint ratio = reps[i];
        for (std::size_t k = 0; k < 3; ++k) ratio.coords[k] = ratio[k] / reps[j][k];
        CHECK_FALSE(membership(ratio, h0));
      }
    }
  }
}

TEST_CASE("parametrized points lie in the identity component") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const auto h = subgroup_from_lattice(torus::testing::random_lattice(rng, 3, 2, 4));
    const auto map = parametrize(h);
    std::vector<CycloRational> t;
    for (std::size_t j = 0; j < map.parameters(); ++j)
      t.push_back(torus::testing::random_cyclo(rng));
    const auto p = map.apply(t);
    CHECK(membership(p, identity_component(h)));
    if (h.connected()) CHECK(membership(p, h));
    // shifting by a coset representative stays inside h
    for (const auto& c : coset_representatives(h)) CHECK(membership(p * c, h));
  }
}
