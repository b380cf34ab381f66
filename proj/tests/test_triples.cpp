#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "dormant/exact.hpp"
#include "dormant/triples.hpp"

using namespace dormant;

namespace {

Bigint balanced_count_formula(const PrimeLevel& pp) {
  const Bigint numerator = (Bigint(pp.p) * pp.p - 1) * pp.q *
                           ipow(Bigint(pp.p) * pp.p + 2, pp.N - 1);
  const Bigint denominator = 8 * ipow(3, pp.N);
  REQUIRE(numerator % denominator == 0);
  return numerator / denominator;
}

}  // namespace

TEST_CASE("level one balanced triples") {
  const PrimeLevel p3(3, 1);
  const auto list3 = enumerate_dagger_C(p3);
  REQUIRE(list3.size() == 1);
  CHECK(list3[0] == ExponentTriple{0, 0, 0});

  const PrimeLevel p5(5, 1);
  const auto list5 = enumerate_dagger_C(p5);
  const std::vector<ExponentTriple> expected5 = {
      {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
  CHECK(list5 == expected5);
}

TEST_CASE("golden list at p=3 level 2") {
  const auto list = enumerate_dagger_C(PrimeLevel(3, 2));
  const std::vector<ExponentTriple> expected = {
      {0, 0, 0}, {0, 2, 2}, {0, 3, 3}, {2, 0, 2}, {2, 2, 0}, {2, 2, 2},
      {2, 2, 3}, {2, 3, 2}, {3, 0, 3}, {3, 2, 2}, {3, 3, 0}};
  CHECK(list == expected);
}

TEST_CASE("balanced count matches the closed form") {
  for (const long long p : {3ll, 5ll, 7ll}) {
    for (const int n : {1, 2}) {
      const PrimeLevel pp(p, n);
      const auto list = enumerate_dagger_C(pp);
      CHECK(Bigint(list.size()) == balanced_count_formula(pp));
      CHECK(std::is_sorted(list.begin(), list.end()));
    }
  }
  CHECK(Bigint(enumerate_dagger_C(PrimeLevel(3, 3)).size()) ==
        balanced_count_formula(PrimeLevel(3, 3)));
}

TEST_CASE("balance is permutation invariant") {
  const PrimeLevel pp(5, 2);
  for (long long s1 = 0; s1 < pp.q; s1 += 3) {
    for (long long s2 = 0; s2 < pp.q; s2 += 2) {
      for (long long s3 = 0; s3 < pp.q; s3 += 3) {
        const bool base = in_dagger_C({s1, s2, s3}, pp);
        CHECK(in_dagger_C({s1, s3, s2}, pp) == base);
        CHECK(in_dagger_C({s2, s1, s3}, pp) == base);
        CHECK(in_dagger_C({s2, s3, s1}, pp) == base);
        CHECK(in_dagger_C({s3, s1, s2}, pp) == base);
        CHECK(in_dagger_C({s3, s2, s1}, pp) == base);
      }
    }
  }
}

TEST_CASE("coordinates of balanced triples form the s-value alphabet") {
  const PrimeLevel pp(3, 2);
  CHECK(svalue_alphabet(pp) == std::vector<long long>{0, 2, 3});
  CHECK(svalue_alphabet(PrimeLevel(3, 1)) == std::vector<long long>{0});
  CHECK(svalue_alphabet(PrimeLevel(5, 1)) == std::vector<long long>{0, 1});

  std::set<long long> seen;
  for (const auto& t : enumerate_dagger_C(pp)) {
    seen.insert(t.s1);
    seen.insert(t.s2);
    seen.insert(t.s3);
  }
  const auto alphabet = svalue_alphabet(pp);
  CHECK(seen == std::set<long long>(alphabet.begin(), alphabet.end()));
}

TEST_CASE("parameter triples: cardinality and construction") {
  for (const long long p : {3ll, 5ll}) {
    for (const int n : {1, 2}) {
      const PrimeLevel pp(p, n);
      const auto built = enumerate_dagger_B(pp);
      const auto brute = enumerate_dagger_B_bruteforce(pp);
      CHECK(built == brute);
      CHECK(Bigint(built.size()) == 8 * balanced_count_formula(pp));
    }
  }
}

TEST_CASE("digit-wise construction examples") {
  const PrimeLevel p31(3, 1);
  CHECK(delta_construct({{0, 1, 1}}, 1, p31) == ParamTriple{1, 2, 2});
  CHECK(delta_construct({{0, 1, 1}}, 2, p31) == ParamTriple{2, 1, 2});

  const PrimeLevel p32(3, 2);
  CHECK(delta_construct({{0, 1, 1}, {0, 0, 0}}, 1, p32) ==
        ParamTriple{1, 2, 2});
  CHECK(delta_construct({{0, 1, 1}, {2, 1, 0}}, 1, p32) ==
        ParamTriple{7, 2, 5});
  CHECK(in_dagger_B({7, 2, 5}, p32));

  CHECK_THROWS_AS(delta_construct({{1, 1, 1}}, 1, p31), ParameterError);
  CHECK_THROWS_AS(delta_construct({{0, 1, 1}, {0, 1, 0}}, 1, p32),
                  ParameterError);
  CHECK_THROWS_AS(delta_construct({{0, 1, 1}}, 3, p31), ParameterError);
  CHECK_THROWS_AS(delta_construct({{0, 1, 1}}, 1, p32), ParameterError);
}

TEST_CASE("eight-to-one projection onto balanced triples") {
  const PrimeLevel pp(3, 2);
  const DaggerCIndex index = build_dagger_c_index(pp);
  std::map<ExponentTriple, int> fiber;
  for (const ParamTriple& t : enumerate_dagger_B(pp)) {
    const ExponentTriple image = bc_map(t, pp, index);
    CHECK(in_dagger_C(image, pp));
    ++fiber[image];

    const auto want = xi(t, pp);
    const auto got = zeta(image, pp);
    CHECK(got[0] == want[0]);
    CHECK(got[1] == want[1]);
    CHECK(got[2] == want[2]);
  }
  CHECK(fiber.size() == enumerate_dagger_C(pp).size());
  for (const auto& [image, size] : fiber) CHECK(size == 8);
}

TEST_CASE("projection rejects triples outside the parameter set") {
  const PrimeLevel pp(3, 1);
  CHECK_FALSE(in_dagger_B({1, 1, 1}, pp));
  CHECK_THROWS_AS(bc_map({1, 1, 1}, pp), DomainError);
}
