#include <algorithm>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "torus/dependence.hpp"
#include "torus/error.hpp"
#include "torus/witness.hpp"

using namespace torus;
using torus::testing::uniform;

namespace {

CycloRational q(long a, long b = 1) { return CycloRational::from_rational(Rat(a, b)); }
CycloRational zeta(long n, long k = 1) { return CycloRational::root_of_unity(n, k); }
TorusPoint pt(std::vector<CycloRational> c) { return TorusPoint{std::move(c)}; }

bool torsion_free(const TorusPoint& p) {
  return std::all_of(p.coords.begin(), p.coords.end(),
                     [](const CycloRational& c) { return c.angle() == 0; });
}

// Ceiling on basis_bound / sqrt(det_l) for the torsion-free suite below; the
// largest value seen there is 1.
constexpr double kBoundRatioCeiling = 2.0;

}  // namespace

TEST_CASE("free exponent lattice examples") {
  const auto m = free_exponent_lattice(pt({q(2), q(4), q(8)}));
  CHECK(m == Lattice::span(3, {{1, 2, 3}}));
  CHECK(orthogonal(m).rank() == 2);
  CHECK(free_exponent_lattice(pt({zeta(3), q(-1)})).rank() == 0);
  CHECK(orthogonal(free_exponent_lattice(pt({zeta(3), q(-1)}))) == Lattice::full(2));
  const auto two = free_exponent_lattice(pt({q(2), q(3)}));
  CHECK(two.rank() == 2);
  CHECK(orthogonal(two).rank() == 0);
}

TEST_CASE("witness examples") {
  const auto p = pt({q(2), q(3), q(6)});
  const auto one = witness_subgroup(p, 1, 2);
  REQUIRE(one.status == WitnessStatus::found);
  CHECK(one.witness->subgroup.lattice() == Lattice::span(3, {{1, 1, -1}}));
  CHECK(one.witness->subgroup.connected());
  CHECK(membership(p, one.witness->subgroup));

  CHECK(witness_subgroup(p, 2, 3).status == WitnessStatus::rank_obstruction);

  const auto r = pt({q(2), q(4), q(8)});
  const auto two = witness_subgroup(r, 2, 3);
  REQUIRE(two.status == WitnessStatus::found);
  CHECK(two.witness->subgroup.codimension() == 2);
  CHECK(two.witness->subgroup.connected());
  CHECK(membership(r, two.witness->subgroup));
  CHECK(is_sublattice(two.witness->subgroup.lattice(), Lattice::span(3, {{2, -1, 0}, {3, 0, -1}})));

  // only even powers of -1 are relations, so no connected subgroup works
  CHECK(witness_subgroup(pt({q(-1), q(2)}), 1, 3).status == WitnessStatus::none_up_to_bound);
  CHECK(witness_subgroup(pt({q(5)}), 0, 1).witness->subgroup.codimension() == 0);
}

TEST_CASE("determinant chain on torsion-free points") {
  std::mt19937_64 rng(31);
  double worst_ratio = 0;
  int witnesses = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto p = torus::testing::random_point(rng, n, 3, 1);
    const auto s = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n)));
    const auto res = witness_subgroup(p, s, 2);
    if (!res.witness) continue;
    ++witnesses;
    const auto& w = *res.witness;
    CHECK(w.det_l <= w.det_m_perp);
    CHECK(w.det_m_perp <= w.det_m);
    CHECK(membership(p, w.subgroup));
    if (s > 0) worst_ratio = std::max(worst_ratio, w.bound_ratio());
  }
  CHECK(witnesses > 100);
  CHECK(worst_ratio <= kBoundRatioCeiling);
}

TEST_CASE("determinant chain fails once torsion enters") {
  // (i, -1) lies in the connected subgroup x^2 y = 1, but every primitive
  // relation a has a_1 + 2 a_2 = 0 mod 4, hence |a|^2 >= 5 > det M = 1.
  const auto p = pt({zeta(4), q(-1)});
  const auto res = witness_subgroup(p, 1, 2);
  REQUIRE(res.status == WitnessStatus::found);
  CHECK(membership(p, res.witness->subgroup));
  CHECK(res.witness->det_m.value == 1);
  CHECK(res.witness->det_l.value == 5);
  torus::testing::for_each_box_vector(2, 2, [&](const std::vector<long>& k) {
    if (torus::testing::gcd_all(k) == 1 && torus::testing::relation_holds(p, k))
      CHECK(k[0] * k[0] + k[1] * k[1] >= 5);
  });
}

TEST_CASE("witness soundness on points inside connected subgroups") {
  std::mt19937_64 rng(17);
  std::vector<std::vector<AlgebraicSubgroup>> pools(4);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& h : enumerate_connected_subgroups(n, 1, 2)) pools[n].push_back(h);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const auto& pool = pools[n];
    const auto& h = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))];
    const auto p = torus::testing::point_in_subgroup(rng, h);
    REQUIRE(membership(p, h));
    const auto res = witness_subgroup(p, h.codimension(), h.lattice().basis().max_abs().get_si());
    REQUIRE(res.status == WitnessStatus::found);
    CHECK(res.witness->subgroup.codimension() >= h.codimension());
    CHECK(res.witness->subgroup.connected());
    CHECK(membership(p, res.witness->subgroup));
  }
}

TEST_CASE("none-up-to-bound verdicts are confirmed exhaustively") {
  std::mt19937_64 rng(23);
  int confirmed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const auto p = torus::testing::random_point(rng, n, 1, 6);
    const auto s = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n)));
    const long bound = uniform(rng, 1, 2);
    const auto res = witness_subgroup(p, s, bound);
    if (res.status == WitnessStatus::found) {
      CHECK(membership(p, res.witness->subgroup));
      CHECK(res.witness->subgroup.connected());
      continue;
    }
    CHECK_FALSE(torus::testing::exists_primitive_relation_lattice(p, s, bound));
    ++confirmed;
  }
  CHECK(confirmed > 20);
}

TEST_CASE("primitivity promotion") {
  const auto a = Lattice::span(3, {{1, 2, 0}, {0, 1, 1}});
  CHECK(primitivity_promotion_check(a, a));
  CHECK_THROWS_AS(primitivity_promotion_check(Lattice::span(3, {{2, 4, 0}, {0, 2, 2}}), a),
                  DomainError);
  CHECK_THROWS_AS(primitivity_promotion_check(Lattice::span(3, {{1, 0, 0}}), a), DomainError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ambient = saturate(torus::testing::random_lattice(rng, 4, 3, 6));
    if (ambient.rank() == 0) continue;
    // a unimodular change of basis is the only way to get an equal-rank
    // primitive sublattice
    const auto u = torus::testing::random_unimodular(rng, ambient.rank());
    const auto l = Lattice::row_span(u * ambient.basis());
    CHECK(primitivity_promotion_check(l, ambient));
    // scaling a row leaves a sublattice that is no longer primitive
    auto rows = ambient.basis_vectors();
    for (auto& x : rows[0]) x *= 2;
    CHECK_THROWS_AS(primitivity_promotion_check(Lattice::span(4, rows), ambient), DomainError);
  }
}
