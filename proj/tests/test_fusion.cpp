#include <doctest.h>

#include <cmath>
#include <vector>

#include "dormant/fusion.hpp"

using namespace dormant;

namespace {

std::vector<Bigint> unit_vector(int dim, int index) {
  std::vector<Bigint> v(dim, 0);
  v[index] = 1;
  return v;
}

}  // namespace

TEST_CASE("ring at p=3 level 2") {
  const PrimeLevel pp(3, 2);
  const FusionRing ring = build_fusion_ring(pp);
  REQUIRE(ring.dim() == 3);
  CHECK(ring.basis[0].lambda == 1);
  CHECK(ring.basis[1].lambda == 2);
  CHECK(ring.basis[2].lambda == 4);
  CHECK(ring.svalues == std::vector<long long>{0, 3, 2});

  // e1 is the class with s-value 3, e2 the class with s-value 2.
  const auto e1 = unit_vector(3, 1);
  const auto e2 = unit_vector(3, 2);
  CHECK(multiply(ring, e2, e2) == std::vector<Bigint>{1, 1, 1});
  CHECK(multiply(ring, e1, e1) == std::vector<Bigint>{1, 0, 0});
  CHECK(multiply(ring, e1, e2) == std::vector<Bigint>{0, 0, 1});

  CHECK(ring.index_of(radius_class(2, pp)) == 1);
  CHECK_THROWS_AS(ring.index_of(RadiusClass{3}), DomainError);

  int nonzero = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) nonzero += ring.structure_constant(i, j, k);
    }
  }
  CHECK(nonzero == 11);

  CHECK(casimir(ring) == std::vector<Bigint>{3, 1, 1});
}

TEST_CASE("identity element") {
  for (const PrimeLevel pp : {PrimeLevel(3, 2), PrimeLevel(5, 1)}) {
    const FusionRing ring = build_fusion_ring(pp);
    for (int i = 0; i < ring.dim(); ++i) {
      const auto x = unit_vector(ring.dim(), i);
      CHECK(multiply(ring, unit_vector(ring.dim(), 0), x) == x);
    }
  }
}

TEST_CASE("characters separate and multiply") {
  const PrimeLevel pp(3, 2);
  const FusionRing ring = build_fusion_ring(pp);
  const CharacterTable table = characters(ring);
  REQUIRE(table.chi.size() == 3);
  CHECK(table.residual < 1e-9);

  CHECK(table.casimir_values[0] == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(table.casimir_values[1] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(table.casimir_values[2] == doctest::Approx(2.0).epsilon(1e-9));

  for (size_t k = 0; k < table.chi.size(); ++k) {
    CHECK(table.chi[k][0] == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(table.chi[0][1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(table.chi[0][2] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(table.chi[1][1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(table.chi[1][2] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(table.chi[2][1] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(std::abs(table.chi[2][2]) < 1e-9);

  const CharacterTable again = characters(ring);
  CHECK(again.chi == table.chi);
}

TEST_CASE("degrees through characters round to the exact counts") {
  for (const PrimeLevel pp : {PrimeLevel(3, 2), PrimeLevel(5, 1)}) {
    const FusionRing ring = build_fusion_ring(pp);
    CHECK(degree_exact(ring, 2, {}) == degree_char(ring, 2, {}));
    CHECK(degree_exact(ring, 3, {}) == degree_char(ring, 3, {}));
    const std::vector<RadiusClass> legs = {ring.basis[ring.dim() - 1],
                                           ring.basis[0]};
    CHECK(degree_exact(ring, 1, legs) == degree_char(ring, 1, legs));
  }
}

TEST_CASE("frobenius structure checks") {
  for (const PrimeLevel pp : {PrimeLevel(3, 2), PrimeLevel(5, 1)}) {
    const FusionRing ring = build_fusion_ring(pp);
    const TQFTReport report = tqft_checks(ring);
    CHECK(report.checks_run > 0);
    CHECK(report.failures.empty());
  }
}

TEST_CASE("adding a unit leg never changes a degree") {
  const PrimeLevel pp(3, 2);
  const FusionRing ring = build_fusion_ring(pp);
  CHECK(forgetting_tails_check(ring, 2, {}));
  CHECK(forgetting_tails_check(ring, 1, {ring.basis[1]}));
  CHECK(forgetting_tails_check(ring, 0, {ring.basis[2], ring.basis[2],
                                         ring.basis[1]}));
}

TEST_CASE("level one trigonometric totals") {
  for (const long long p : {3ll, 5ll, 7ll}) {
    const PrimeLevel pp(p, 1);
    const FusionRing ring = build_fusion_ring(pp);
    for (int g = 0; g <= 3; ++g) {
      for (int r = 0; r <= 3; ++r) {
        if (2 * g - 2 + r <= 0) continue;
        Bigint exact = 0;
        const CountResult by_radius = count_numberings(
            standard_graph(g, r), pp, std::nullopt, true);
        for (const auto& [key, value] : by_radius.per_radius) exact += value;
        const double trig = verlinde_N1(p, g, r);
        const double want = static_cast<double>(exact);
        CHECK(std::abs(trig - want) <= 1e-6 * (1.0 + std::abs(want)));
      }
    }
  }
}
