#pragma once

#include <array>
#include <map>
#include <vector>

#include "dormant/arith.hpp"

namespace dormant {

// Exponent triple (s1, s2, s3), coordinates in [0, q-1].
struct ExponentTriple {
  long long s1 = 0, s2 = 0, s3 = 0;
  auto operator<=>(const ExponentTriple&) const = default;
  long long operator[](int i) const { return i == 0 ? s1 : (i == 1 ? s2 : s3); }
};

// Parameter triple (a, b, c), coordinates in [1, q].
struct ParamTriple {
  long long a = 0, b = 0, c = 0;
  auto operator<=>(const ParamTriple&) const = default;
  long long operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

// Default cap on q = p^N for exhaustive scans.
inline constexpr long long kDefaultMaxQ = 343;

// Level-N' balance conditions: coordinates in [0, p^{N'}-1], sum at most
// p^{N'}-2, and the triangle inequalities |s2-s3| <= s1 <= s2+s3.
bool in_C(const ExponentTriple& t, int n_prime, const PrimeLevel& pp);

// Balance at level N plus, for every lower level N', some choice of
// s'_i in {reduce(s_i, N'), p^{N'}-1-reduce(s_i, N')} satisfying the level-N'
// conditions.
bool in_dagger_C(const ExponentTriple& t, const PrimeLevel& pp);

// Lexicographically sorted list of all balanced exponent triples.
std::vector<ExponentTriple> enumerate_dagger_C(const PrimeLevel& pp,
                                               long long max_q = kDefaultMaxQ);

// Level-N' condition on parameter triples: a < c <= b or b < c <= a after
// primed reduction to [1, p^{N'}].
bool in_B(const ParamTriple& t, int n_prime, const PrimeLevel& pp);
bool in_dagger_B(const ParamTriple& t, const PrimeLevel& pp);

// Radii of the three exponent differences (1-c)/2, (c-a-b)/2, (b-a)/2.
std::array<RadiusClass, 3> xi(const ParamTriple& t, const PrimeLevel& pp);

// Radii of the half-odd values (2*s_i + 1)/2.
std::array<RadiusClass, 3> zeta(const ExponentTriple& t, const PrimeLevel& pp);

// Lookup table from zeta radius triples to their unique balanced preimage.
using DaggerCIndex = std::map<std::array<long long, 3>, ExponentTriple>;
DaggerCIndex build_dagger_c_index(const PrimeLevel& pp,
                                  long long max_q = kDefaultMaxQ);

// The exponent triple with the same radii as xi(t).  Requires t in dagger-B.
ExponentTriple bc_map(const ParamTriple& t, const PrimeLevel& pp,
                      const DaggerCIndex& index);
ExponentTriple bc_map(const ParamTriple& t, const PrimeLevel& pp);

// Digit-wise construction of parameter triples.  digits[0] must satisfy
// r1 < r2 <= r3 and every later vector r1 <= r2 <= r3 or r1 > r2 > r3, all
// entries in [0, p-1].  variant is 1 or 2 (2 swaps the first two outputs).
ParamTriple delta_construct(const std::vector<std::array<long long, 3>>& digits,
                            int variant, const PrimeLevel& pp);

// All of dagger-B, produced by delta_construct over all admissible digit
// sequences and both variants, sorted lexicographically.
std::vector<ParamTriple> enumerate_dagger_B(const PrimeLevel& pp,
                                            long long max_q = kDefaultMaxQ);

// Direct filter of [1,q]^3 by in_dagger_B, sorted lexicographically.
std::vector<ParamTriple> enumerate_dagger_B_bruteforce(
    const PrimeLevel& pp, long long max_q = kDefaultMaxQ);

// The s-values occurring as coordinates of balanced triples, ascending.
std::vector<long long> svalue_alphabet(const PrimeLevel& pp);

}  // namespace dormant
