#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dormant/exact.hpp"
#include "dormant/semigraph.hpp"
#include "dormant/triples.hpp"

namespace dormant {

// Sign pattern: one sign per coordinate in {0,1,2} and level in [1,N];
// level-N signs are all +1.
struct SignVector {
  int N = 1;
  // levels[j-1] = signs at level j.
  std::vector<std::array<int, 3>> levels;

  int sign(int coord, int level) const { return levels[level - 1][coord]; }
};

// All 8^{N-1} admissible sign patterns, lexicographic.
std::vector<SignVector> enumerate_sign_vectors(int N);

// One affine row: sum(coeffs . x) <= rhs, or < rhs when strict.  Dilation by
// m scales rhs to m * rhs.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = false;
};

// Conjunction of rows over [0,1]^dimension (the box rows are included).
struct InequalitySystem {
  int dimension = 0;
  std::vector<LinearConstraint> rows;
};

// Finite union of systems in a common dimension.  Counting deduplicates
// points that satisfy several pieces.
struct ConstructibleSet {
  int dimension = 0;
  std::vector<InequalitySystem> pieces;
};

// Level-one piece: strict sum bound, weak lower bounds and weak triangle
// bounds, with coordinate i flipped to 1-x when the level-1 sign is -1.
ConstructibleSet build_P1(const SignVector& a, const PrimeLevel& pp);

// Levels 2..N piece in 3(N-1) coordinates; per level the strictness profile
// is selected by the ratios of consecutive signs.  For N = 1 this is the
// zero-dimensional point.
ConstructibleSet build_P2(const SignVector& a, const PrimeLevel& pp);

// Number of integer points of the m-fold dilation.
Bigint lattice_count(const ConstructibleSet& set, long long m,
                     long long max_points = 200'000'000);

// Sum over sign patterns of the product of the two dilated point counts;
// equals the number of balanced exponent triples.
Bigint dagger_C_via_lattice(const PrimeLevel& pp);

// Graph versions: the vertex conditions imposed on one variable per edge
// (levels >= 2 add one variable per edge per level), with the branch order
// as the slot identification.  The sign-pattern sum is exact for graphs
// where every numbering places its edge patterns consistently into the
// three slots (one-vertex graphs, and the loop with a tail).
std::pair<ConstructibleSet, ConstructibleSet> build_graph_sets(
    const ClutchingData& c, const SignVector& a, const PrimeLevel& pp);

Bigint edge_count_via_lattice(const ClutchingData& c, const PrimeLevel& pp);

// Piecewise polynomial with a fixed period: constituents[s] holds the
// rational coefficients (ascending powers) used when t = s mod period.
struct QuasiPolynomial {
  long long period = 1;
  std::vector<std::vector<Rational>> constituents;

  Rational evaluate(long long t) const;
  int degree() const;
};

QuasiPolynomial qp_shift(const QuasiPolynomial& f, long long delta);  // f(t + delta)
QuasiPolynomial qp_add(const QuasiPolynomial& f, const QuasiPolynomial& g);
QuasiPolynomial qp_mul(const QuasiPolynomial& f, const QuasiPolynomial& g);

// Smallest candidate period whose per-residue interpolations of the given
// degree reproduce every sample; throws NoPeriodFits otherwise.
QuasiPolynomial fit_quasipolynomial(
    const std::vector<std::pair<long long, Bigint>>& samples, int degree,
    const std::vector<long long>& period_candidates = {2, 4, 8});

struct CountingFitReport {
  QuasiPolynomial counting_function;  // value at t = p is the edge count
  int expected_degree = 0;
  bool degree_matches = false;
  bool period_even = false;
  struct Row {
    long long p = 0;
    Bigint predicted;
    Bigint actual;
    bool match = false;
  };
  std::vector<Row> rows;
  bool all_match = false;
};

// Fits the lattice counting function of the standard graph of the type and
// compares its values at the given primes with the direct edge counts.
CountingFitReport verify_thm5(int genus, int marked,
                       const std::vector<long long>& primes, int N);

}  // namespace dormant
