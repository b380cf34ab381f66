#include <doctest.h>

#include "dormant/arith.hpp"

using namespace dormant;

TEST_CASE("prime level validation") {
  CHECK_THROWS_AS(PrimeLevel(4, 1), ParameterError);
  CHECK_THROWS_AS(PrimeLevel(2, 1), ParameterError);
  CHECK_THROWS_AS(PrimeLevel(9, 1), ParameterError);
  CHECK_THROWS_AS(PrimeLevel(1, 1), ParameterError);
  CHECK_THROWS_AS(PrimeLevel(-3, 1), ParameterError);
  CHECK_THROWS_AS(PrimeLevel(3, 0), ParameterError);
  CHECK_THROWS_AS(PrimeLevel(3, -2), ParameterError);

  const PrimeLevel pp(7, 2);
  CHECK(pp.q == 49);
  CHECK(pp.pow_p(0) == 1);
  CHECK(pp.pow_p(1) == 7);
  CHECK(pp.pow_p(2) == 49);
}

TEST_CASE("reduction windows") {
  const PrimeLevel pp(3, 2);
  CHECK(reduce(9, 1, pp) == 0);
  CHECK(reduce(10, 2, pp) == 1);
  CHECK(reduce(-1, 2, pp) == 8);
  CHECK(reduce(-1, 1, pp) == 2);

  CHECK(reduce_prime(9, 2, pp) == 9);
  CHECK(reduce_prime(9, 1, pp) == 3);
  CHECK(reduce_prime(0, 2, pp) == 9);
  CHECK(reduce_prime(10, 2, pp) == 1);
  CHECK(reduce_prime(-2, 2, pp) == 7);
}

TEST_CASE("residue classes fold signs") {
  const PrimeLevel pp(3, 2);
  CHECK(residue_class(2, pp).rep == 2);
  CHECK(residue_class(7, pp).rep == 2);
  CHECK(residue_class(-2, pp).rep == 2);
  CHECK(residue_class(0, pp).rep == 0);
  CHECK(residue_class(9, pp).rep == 0);
}

TEST_CASE("radius classes have canonical coprime representatives") {
  const PrimeLevel pp(3, 2);
  CHECK(radius_class(1, pp).lambda == 1);
  CHECK(radius_class(8, pp).lambda == 1);
  CHECK(radius_class(-1, pp).lambda == 1);
  CHECK(radius_class(5, pp).lambda == 4);
  CHECK(radius_class(13, pp).lambda == 4);
  CHECK_THROWS_AS(radius_class(3, pp), NotInvertible);
  CHECK_THROWS_AS(radius_class(6, pp), NotInvertible);
  CHECK_THROWS_AS(radius_class(0, pp), NotInvertible);

  CHECK(epsilon(pp).lambda == 1);
  CHECK(involute(radius_class(5, pp)).lambda == 4);
}

TEST_CASE("radius enumeration size") {
  CHECK(enumerate_radii(PrimeLevel(3, 1)).size() == 1);
  CHECK(enumerate_radii(PrimeLevel(5, 1)).size() == 2);
  CHECK(enumerate_radii(PrimeLevel(3, 2)).size() == 3);
  CHECK(enumerate_radii(PrimeLevel(5, 2)).size() == 10);
  CHECK(enumerate_radii(PrimeLevel(7, 2)).size() == 21);
  CHECK(enumerate_radii(PrimeLevel(3, 3)).size() == 9);

  const auto radii = enumerate_radii(PrimeLevel(3, 2));
  CHECK(radii[0].lambda == 1);
  CHECK(radii[1].lambda == 2);
  CHECK(radii[2].lambda == 4);
}

TEST_CASE("s-values pair with radii") {
  const PrimeLevel pp(3, 2);
  CHECK(svalue_of_radius(radius_class(1, pp), pp) == 0);
  CHECK(svalue_of_radius(radius_class(2, pp), pp) == 3);
  CHECK(svalue_of_radius(radius_class(4, pp), pp) == 2);

  for (const PrimeLevel level :
       {PrimeLevel(3, 2), PrimeLevel(5, 2), PrimeLevel(7, 1)}) {
    for (const RadiusClass rho : enumerate_radii(level)) {
      const long long s = svalue_of_radius(rho, level);
      CHECK(s >= 0);
      CHECK(2 * s + 1 <= level.q - 2);
      CHECK(radius_of_svalue(s, level) == rho);
    }
  }
}
