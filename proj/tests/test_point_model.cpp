#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "torus/dependence.hpp"
#include "torus/error.hpp"

using namespace torus;
using torus::testing::for_each_box_vector;
using torus::testing::gcd_all;
using torus::testing::random_point;
using torus::testing::relation_holds;

namespace {

CycloRational q(long a, long b = 1) { return CycloRational::from_rational(Rat(a, b)); }
CycloRational zeta(long n, long k = 1) { return CycloRational::root_of_unity(n, k); }
TorusPoint pt(std::vector<CycloRational> c) { return TorusPoint{std::move(c)}; }

// h(a/b) = log max(|a|, |b|) straight from the reduced fraction.
double rational_height(const Rat& r) {
  const Int num = abs(r.get_num());
  const Int den = r.get_den();
  return std::log(std::max(num, den).get_d());
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((q(2, 3) * q(3, 2)).is_one());
  CHECK((zeta(3) * q(2)).pow(3) == q(8));
  CHECK(zeta(4).inverse() == zeta(4, 3));
  CHECK(q(-1) == zeta(2));
  CHECK_THROWS_AS(q(0), DomainError);
  CHECK_THROWS_AS(CycloRational::from_rational(Rat(1000003) * 1000033, 1000),
                  UnfactorableError);
}

TEST_CASE("parsing") {
  CHECK(parse_cyclo("zeta(6,1)*2/3*5^-2") == zeta(6) * q(2, 75));
  CHECK(parse_cyclo("-2") == zeta(2) * q(2));
  CHECK(parse_cyclo("zeta(4)") == zeta(4));
  CHECK(parse_cyclo("(2*3)^2/4") == q(9));
  CHECK(parse_point("(-1, 2)") == pt({q(-1), q(2)}));
  CHECK(parse_point("3,1/5") == pt({q(3), q(1, 5)}));
  CHECK_THROWS_AS(parse_cyclo("2*"), ParseError);
  CHECK_THROWS_AS(parse_cyclo("zeta(0)"), ParseError);
  CHECK_THROWS_AS(parse_cyclo("0"), DomainError);
  for (const auto& text : {"zeta(6,1)*2/3", "-7/2", "1", "zeta(12,5)*49"})
    CHECK(parse_cyclo(parse_cyclo(text).to_string()) == parse_cyclo(text));
}

TEST_CASE("weil height examples") {
  CHECK(q(2).weil_height() == doctest::Approx(std::log(2.0)));
  CHECK(zeta(6).weil_height() == 0.0);
  CHECK((zeta(3) * q(2, 3)).weil_height() == doctest::Approx(std::log(3.0)));
}

TEST_CASE("weil height matches the fraction formula") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = torus::testing::random_cyclo(rng, 4, 8);
    CHECK(c.weil_height() == doctest::Approx(rational_height(c.rational_part())).epsilon(1e-12));
    CHECK((c * zeta(7, 3)).weil_height() == c.weil_height());
    const long k = torus::testing::uniform(rng, -5, 5);
    CHECK(c.pow(k).weil_height() ==
          doctest::Approx(std::abs(k) * c.weil_height()).epsilon(1e-12));
  }
}

TEST_CASE("relation lattice examples") {
  CHECK(relation_lattice(pt({q(2), q(3), q(6)})) == Lattice::span(3, {{1, 1, -1}}));
  CHECK(relation_lattice(pt({q(-1), q(2)})) == Lattice::span(2, {{2, 0}}));
  CHECK(relation_lattice(pt({q(2), q(3)})).rank() == 0);
  CHECK(relation_lattice(pt({zeta(6), zeta(6, 5)})) == Lattice::span(2, {{1, 1}, {0, 6}}));
}

TEST_CASE("dependence examples") {
  const auto a = pt({q(2), q(4)});
  CHECK(is_multiplicatively_dependent(a));
  CHECK(is_primitively_dependent(a));
  const auto w = *primitive_relation(a);
  CHECK((w == IntVector{2, -1} || w == IntVector{-2, 1}));

  const auto b = pt({q(-1), q(2)});
  CHECK(is_multiplicatively_dependent(b));
  CHECK_FALSE(is_primitively_dependent(b));

  const auto c = pt({q(2), q(3)});
  CHECK_FALSE(is_multiplicatively_dependent(c));
  CHECK_FALSE(is_primitively_dependent(c));
}

TEST_CASE("relation lattice agrees with exhaustive search") {
  std::mt19937_64 rng(21);
  constexpr long kBox = 6;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = trial % 3 == 0 ? 3 : 2;
    const auto p = random_point(rng, n);
    const Lattice r = relation_lattice(p);
    bool brute_primitive = false;
    for_each_box_vector(n, kBox, [&](const std::vector<long>& k) {
      const bool holds = relation_holds(p, k);
      IntVector v(k.begin(), k.end());
      CHECK(contains(r, v) == holds);
      if (holds && gcd_all(k) == 1) brute_primitive = true;
    });
    const auto w = primitive_relation(p);
    if (w) {
      std::vector<long> k;
      for (const auto& x : *w) k.push_back(x.get_si());
      CHECK(relation_holds(p, k));
      CHECK(gcd_all(k) == 1);
    }
    if (brute_primitive) CHECK(w.has_value());
    if (w && max_abs(*w) <= kBox) CHECK(brute_primitive);
    CHECK(is_multiplicatively_dependent(p) == (r.rank() > 0));
  }
}

TEST_CASE("group decomposition examples") {
  const auto d = group_decomposition(pt({zeta(4) * q(2), q(8)}));
  REQUIRE(d.rank() == 1);
  CHECK(d.generators[0] == q(2));
  CHECK(d.exponent_matrix == IntMatrix{{1}, {3}});
  CHECK(d.torsion_parts == std::vector<CycloRational>{zeta(4), CycloRational()});

  const auto t = group_decomposition(pt({zeta(6), zeta(6, 5)}));
  CHECK(t.rank() == 0);
  CHECK(t.reconstruct() == pt({zeta(6), zeta(6, 5)}));

  const auto three = pt({q(6), q(10), q(15)});
  const auto e = group_decomposition(three);
  CHECK(e.rank() == 3);
  CHECK(e.reconstruct() == three);
  CHECK(relation_lattice(TorusPoint{e.generators}).rank() == 0);
}

TEST_CASE("group decomposition round trip") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_point(rng, 1 + trial % 4);
    const auto d = group_decomposition(p);
    CHECK(d.reconstruct() == p);
    if (d.rank() > 0) CHECK(relation_lattice(TorusPoint{d.generators}).rank() == 0);
    for (const auto& z : d.torsion_parts) CHECK(z.is_torsion());
  }
}

TEST_CASE("schlickewei ratio") {
  CHECK(schlickewei_ratio(group_decomposition(pt({q(2)})), 200, 1) == doctest::Approx(1.0));
  // Disjoint supports: h = max(A, B) over the positive and negative parts, so
  // equality holds for same-sign b and the ratio never drops below 1/2.
  const double split = schlickewei_ratio(group_decomposition(pt({q(2), q(3)})), 200, 1);
  CHECK(split >= 0.5);
  CHECK(split < 1.0);
  const double mixed = schlickewei_ratio(group_decomposition(pt({q(2), q(3, 2)})), 500, 7);
  CHECK(mixed > 0.0);
  CHECK(mixed <= 1.0);
  CHECK(mixed == schlickewei_ratio(group_decomposition(pt({q(2), q(3, 2)})), 500, 7));
  CHECK_THROWS_AS(schlickewei_ratio(group_decomposition(pt({zeta(3)})), 10, 1), DomainError);
}

TEST_CASE("decomposition modulo gamma") {
  GammaGroup gamma{{{q(5)}, {}}};
  const auto p = pt({q(10), q(3)});
  const auto d = group_decomposition_mod_gamma(p, gamma);
  CHECK(d.gamma_exponents == std::vector<IntVector>{{1}, {}});
  CHECK(d.residual.reconstruct() == pt({q(2), q(3)}));
  CHECK(d.reconstruct(gamma) == p);
  CHECK(d.residual_independent);

  const GammaGroup none{{{}, {}}};
  const auto plain = group_decomposition_mod_gamma(p, none);
  CHECK(plain.residual.reconstruct() == p);
  CHECK(plain.residual.rank() == group_decomposition(p).rank());

  const auto self = group_decomposition_mod_gamma(pt({q(5)}), GammaGroup{{{q(5)}}});
  CHECK(self.residual.rank() == 0);
  CHECK(self.residual.torsion_parts[0].is_one());

  // 5 lies in the division hull of <25> but not in it
  const auto hull = group_decomposition_mod_gamma(pt({q(5)}), GammaGroup{{{q(25)}}});
  CHECK(hull.gamma_exponents[0] == IntVector{0});
  CHECK_FALSE(hull.residual_independent);
}

TEST_CASE("decomposition modulo gamma round trip") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto p = random_point(rng, n);
    GammaGroup gamma;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<CycloRational> gens;
      const long count = torus::testing::uniform(rng, 0, 2);
      for (long l = 0; l < count; ++l) {
        auto g = torus::testing::random_cyclo(rng, 2, 1);
        if (!g.is_torsion()) gens.push_back(g);
      }
      gamma.generators.push_back(gens);
    }
    const auto d = group_decomposition_mod_gamma(p, gamma);
    CHECK(d.reconstruct(gamma) == p);
  }
}
