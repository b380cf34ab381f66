#include <doctest.h>

#include <map>
#include <vector>

#include "dormant/edgecount.hpp"
#include "dormant/exact.hpp"

using namespace dormant;

TEST_CASE("star counts are the balanced triples") {
  const PrimeLevel pp(3, 2);
  const ClutchingData star = standard_graph(0, 3);
  const CountResult result = count_numberings(star, pp, std::nullopt, true);
  CHECK(result.total == 11);

  std::map<long long, Bigint> first_leg;
  for (const auto& [key, value] : result.per_radius) {
    REQUIRE(key.size() == 3);
    first_leg[key[0]] += value;
  }
  CHECK(first_leg[1] == 3);
  CHECK(first_leg[2] == 3);
  CHECK(first_leg[4] == 5);
}

TEST_CASE("enumeration agrees with the dynamic programming count") {
  const std::vector<GraphType> types = {
      {0, 3}, {1, 1}, {1, 2}, {2, 0}, {0, 4}};
  for (const PrimeLevel pp :
       {PrimeLevel(3, 1), PrimeLevel(3, 2), PrimeLevel(5, 1)}) {
    for (const GraphType type : types) {
      const ClutchingData c = standard_graph(type.genus, type.marked);
      const CountResult counted = count_numberings(c, pp, std::nullopt, true);
      const auto listed = enumerate_numberings(c, pp);
      CHECK(counted.total == Bigint(listed.size()));

      Bigint by_radius = 0;
      for (const auto& [key, value] : counted.per_radius) by_radius += value;
      CHECK(by_radius == counted.total);

      for (size_t i = 1; i < listed.size(); ++i) {
        CHECK(listed[i - 1] < listed[i]);
      }
    }
  }
}

TEST_CASE("radius restriction") {
  const PrimeLevel p5(5, 1);
  const std::vector<RadiusClass> unit(3, epsilon(p5));
  const ClutchingData star = standard_graph(0, 3);
  CHECK(count_numberings(star, p5, unit).total == 1);

  const PrimeLevel p32(3, 2);
  const ClutchingData loop = standard_graph(1, 1);
  CHECK(count_numberings(loop, p32, {{radius_class(2, p32)}}).total == 1);
  CHECK(count_numberings(loop, p32, {{radius_class(1, p32)}}).total == 3);

  CHECK_THROWS_AS(count_numberings(star, p5, {{epsilon(p5)}}),
                  ParameterError);
}

TEST_CASE("totals ignore the choice of graph") {
  for (const PrimeLevel pp : {PrimeLevel(3, 2), PrimeLevel(5, 1)}) {
    CHECK(independence_check(2, 0, pp));
    CHECK(independence_check(1, 2, pp));
  }
}

TEST_CASE("enumeration respects its budget") {
  const PrimeLevel pp(7, 2);
  const ClutchingData c = standard_graph(3, 0);
  CHECK_THROWS_AS(enumerate_numberings(c, pp, std::nullopt, 10),
                  ResourceLimit);
}

TEST_CASE("differential operator counts") {
  const PrimeLevel p32(3, 2);
  CHECK(diff_op_count(2, p32) == 891);
  CHECK(diff_op_count(3, p32) == 35721);

  for (const PrimeLevel pp :
       {PrimeLevel(3, 1), PrimeLevel(3, 2), PrimeLevel(5, 1)}) {
    for (int g = 2; g <= 3; ++g) {
      const Bigint closed =
          count_numberings(standard_graph(g, 0), pp).total;
      CHECK(diff_op_count(g, pp) ==
            ipow(Bigint(pp.p), static_cast<unsigned>(g * pp.N)) * closed);
    }
  }
}
