#pragma once

#include <array>
#include <string>
#include <vector>

#include "dormant/arith.hpp"

namespace dormant {

// Gauss operator with parameters (a, b, c) taken mod q, lifts in [1, q].
struct HGOperator {
  long long a = 0, b = 0, c = 0;
  PrimeLevel pp;

  HGOperator(long long a_, long long b_, long long c_, const PrimeLevel& pp_);
};

// A power series solution developed at 0 and truncated by the vanishing rule.
struct TruncatedSeries {
  long long start_exponent = 0;
  // Residues mod q of the coefficients, lowest exponent first.  The leading
  // coefficient is always 1.
  std::vector<long long> coefficients;
  bool terminated = false;
  // Diagnostic when terminated is false: which rule failed and at which term.
  std::string reason;
};

// Classes of the exponent differences (1-c, c-a-b, b-a) at 0, 1, infinity.
std::array<ResidueClass, 3> exponent_differences(const HGOperator& op);

// Series with coefficient recurrence (1+n)(c+n) q_{n+1} = (a+n)(b+n) q_n,
// stopped at the first n where (a+n)(b+n) vanishes mod q.  If the denominator
// factor (1+n)(c+n) vanishes first, or a coefficient fails to be p-integral,
// the series is marked not terminated with a diagnostic.
TruncatedSeries truncated_2F1(long long a, long long b, long long c,
                              const PrimeLevel& pp);

// True when the kernel has a basis of two polynomial root functions: the
// series at exponent 0 with parameters (a, b, c) and the series at exponent
// 1-c with parameters (a-c+1, b-c+1, 2-c), both terminating and p-integral,
// with distinct start exponents.  The same must hold for the reduction of
// the operator at every level below N: a basis mod p^N reduces to a basis
// mod p^M, so a degenerate lower level rules out a full set.
bool has_full_root_functions(const HGOperator& op);

// Radii of the operator: classes of half the exponent differences.  Throws
// NotInvertible when a difference is divisible by p.
std::array<RadiusClass, 3> hg_radii(const HGOperator& op);

}  // namespace dormant
