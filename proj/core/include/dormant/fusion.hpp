#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dormant/edgecount.hpp"

namespace dormant {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026;
inline constexpr double kDefaultTol = 1e-6;

// Commutative Frobenius algebra on the radii: structure constant
// N_{ijk} in {0,1} indicates whether the paired s-values form a balanced
// triple.  Basis ascending by lambda.
struct FusionRing {
  PrimeLevel pp;
  std::vector<RadiusClass> basis;
  std::vector<long long> svalues;
  std::vector<std::uint8_t> constants;  // dense, index (i*dim + j)*dim + k

  int dim() const { return static_cast<int>(basis.size()); }
  std::uint8_t structure_constant(int i, int j, int k) const {
    return constants[(static_cast<size_t>(i) * basis.size() + j) * basis.size() + k];
  }
  int index_of(RadiusClass rho) const;
};

FusionRing build_fusion_ring(const PrimeLevel& pp);

// Product of two vectors in the basis coordinates.
std::vector<Bigint> multiply(const FusionRing& ring, const std::vector<Bigint>& x,
                             const std::vector<Bigint>& y);

// Sum over the basis of alpha * alpha (duality is the identity).
std::vector<Bigint> casimir(const FusionRing& ring);

struct CharacterTable {
  // chi[k][i] = value of character k on basis element i.
  std::vector<std::vector<double>> chi;
  std::vector<double> casimir_values;
  double residual = 0.0;
};

// Simultaneous characters of the multiplication operators, found through a
// random generic combination with a fixed seed.
CharacterTable characters(const FusionRing& ring, double tol = kDefaultTol,
                          std::uint64_t seed = kDefaultSeed);

// Raw character-sum value sum_k cas_k^(g-1) prod_i chi_k(rho_i), before
// any rounding.
double degree_char_sum(const CharacterTable& table, const FusionRing& ring,
                       int genus, const std::vector<RadiusClass>& radii);

// Degree of the moduli space of the given type and radii, by counting edge
// numberings of the standard graph.
Bigint degree_exact(const FusionRing& ring, int genus,
                    const std::vector<RadiusClass>& radii);

// Same degree through the character sums, rounded; throws RoundingGap when
// the float is not close to an integer.
Bigint degree_char(const FusionRing& ring, int genus,
                   const std::vector<RadiusClass>& radii,
                   double tol = kDefaultTol, std::uint64_t seed = kDefaultSeed);

// Level-one total degree over all radii through the trigonometric sum.
double verlinde_N1(long long p, int genus, int marked);

struct TQFTReport {
  int checks_run = 0;
  std::vector<std::string> failures;
  bool all_pass() const { return failures.empty(); }
};

// Structural checks: unit, associativity, commutativity, pairing
// nondegeneracy, symmetry of degrees, gluing samples, torus and cylinder
// values, loop identity.
TQFTReport tqft_checks(const FusionRing& ring, int trials = 20,
                       std::uint64_t seed = kDefaultSeed);

// deg with an extra unit-radius leg equals deg without it.
bool forgetting_tails_check(const FusionRing& ring, int genus,
                            const std::vector<RadiusClass>& radii);

}  // namespace dormant
