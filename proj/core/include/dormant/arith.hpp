#pragma once

#include <compare>
#include <vector>

#include "dormant/errors.hpp"

namespace dormant {

// Ambient parameters: an odd prime p and a positive level N, with q = p^N.
struct PrimeLevel {
  long long p = 0;
  int N = 0;
  long long q = 0;

  PrimeLevel(long long p_, int N_);

  // p^k for 0 <= k <= N.
  long long pow_p(int k) const;

  bool operator==(const PrimeLevel& other) const {
    return p == other.p && N == other.N;
  }
};

// Radius: element of (Z/qZ)^x / {±1}.  Stored through the doubled value
// 2*rho, whose class has a unique representative lambda with
// 1 <= lambda <= (q-1)/2 and p not dividing lambda.
struct RadiusClass {
  long long lambda = 0;
  auto operator<=>(const RadiusClass&) const = default;
};

// Element of (Z/qZ) / {±1}, stored as min(a mod q, q - a mod q).
struct ResidueClass {
  long long rep = 0;
  auto operator<=>(const ResidueClass&) const = default;
};

// Remainder of a in [0, p^{N'} - 1].
long long reduce(long long a, int n_prime, const PrimeLevel& pp);

// Remainder of a in [1, p^{N'}]: the usual remainder unless a is divisible
// by p^{N'}, in which case the value is p^{N'} itself.
long long reduce_prime(long long a, int n_prime, const PrimeLevel& pp);

ResidueClass residue_class(long long a, const PrimeLevel& pp);

// Class of a unit value representing 2*rho.  Throws NotInvertible when p
// divides the value.
RadiusClass radius_class(long long two_rho, const PrimeLevel& pp);

// Radius attached to an exponent value s, i.e. the class of (2s+1)/2.
RadiusClass radius_of_svalue(long long s, const PrimeLevel& pp);

// The unique s in [0, (q-3)/2] with radius_of_svalue(s) == rho.
long long svalue_of_radius(RadiusClass rho, const PrimeLevel& pp);

// The class of 1/2 (doubled value 1).
RadiusClass epsilon(const PrimeLevel& pp);

// Duality on radii; the identity in rank two.
RadiusClass involute(RadiusClass rho);

// All radii, ascending by lambda.  Size (p-1) * p^{N-1} / 2.
std::vector<RadiusClass> enumerate_radii(const PrimeLevel& pp);

}  // namespace dormant
