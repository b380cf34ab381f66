#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dormant/exact.hpp"
#include "dormant/semigraph.hpp"
#include "dormant/triples.hpp"

namespace dormant {

// An assignment of an s-value to every edge, indexed by edge id.
struct EdgeNumbering {
  std::vector<long long> values;
  auto operator<=>(const EdgeNumbering&) const = default;
};

struct CountResult {
  Bigint total = 0;
  // Keyed by the lambda tuple of the open edges in open-branch order.
  std::map<std::vector<long long>, Bigint> per_radius;
};

// All numberings whose vertex triples are balanced, optionally restricted to
// prescribed radii at the open edges (one radius per open branch, in order).
// Output is sorted lexicographically by edge values.
std::vector<EdgeNumbering> enumerate_numberings(
    const ClutchingData& c, const PrimeLevel& pp,
    const std::optional<std::vector<RadiusClass>>& radii = std::nullopt,
    long long max_results = 50'000'000);

// Same count through frontier dynamic programming with big integers.  When
// per_radius is true the result carries the full radius table.
CountResult count_numberings(
    const ClutchingData& c, const PrimeLevel& pp,
    const std::optional<std::vector<RadiusClass>>& radii = std::nullopt,
    bool per_radius = false);

// True when the standard and alternative graphs of the type agree on the
// total and on every radius tuple.
bool independence_check(int genus, int marked, const PrimeLevel& pp);

// p^{g N} times the closed count of genus g: the number of degree-q^2
// differential operators with full root sets on a general curve.
Bigint diff_op_count(int genus, const PrimeLevel& pp);

}  // namespace dormant
