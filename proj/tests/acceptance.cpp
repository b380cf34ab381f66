#include <cmath>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dormant/edgecount.hpp"
#include "dormant/ehrhart.hpp"
#include "dormant/fusion.hpp"
#include "dormant/hypergeom.hpp"
#include "dormant/semigraph.hpp"
#include "dormant/triples.hpp"

using namespace dormant;

namespace {

constexpr double kTol = 1e-6;

int failures = 0;

void report(int index, const std::string& label, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": "
            << label;
  if (!pass && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!pass) ++failures;
}

Bigint closed_form_03(const PrimeLevel& pp) {
  const Bigint numerator = (Bigint(pp.p) * pp.p - 1) * pp.q *
                           ipow(Bigint(pp.p) * pp.p + 2, pp.N - 1);
  const Bigint denominator = 8 * ipow(3, pp.N);
  if (numerator % denominator != 0) throw Error("closed form not integral");
  return numerator / denominator;
}

Bigint star_count(const PrimeLevel& pp) {
  return count_numberings(standard_graph(0, 3), pp).total;
}

std::vector<PrimeLevel> closed_form_grid() {
  std::vector<PrimeLevel> grid;
  for (const long long p : {3ll, 5ll, 7ll, 11ll}) {
    for (const int n : {1, 2}) grid.emplace_back(p, n);
  }
  grid.emplace_back(3, 3);
  return grid;
}

bool criterion1(std::string& detail) {
  for (const PrimeLevel& pp : closed_form_grid()) {
    const Bigint want = closed_form_03(pp);
    const Bigint got = star_count(pp);
    if (got != want) {
      std::ostringstream s;
      s << "p=" << pp.p << " N=" << pp.N << ": " << got << " != " << want;
      detail = s.str();
      return false;
    }
  }
  return true;
}

bool criterion2(std::string& detail) {
  const std::vector<ExponentTriple> expected = {
      {0, 0, 0}, {0, 2, 2}, {0, 3, 3}, {2, 0, 2}, {2, 2, 0}, {2, 2, 2},
      {2, 2, 3}, {2, 3, 2}, {3, 0, 3}, {3, 2, 2}, {3, 3, 0}};
  const auto got = enumerate_dagger_C(PrimeLevel(3, 2));
  if (got != expected) {
    detail = "lexicographic (3,2) list has " + std::to_string(got.size()) +
             " entries or wrong order";
    return false;
  }
  return true;
}

bool criterion3(std::string& detail) {
  for (const long long p : {3ll, 5ll}) {
    for (const int n : {1, 2}) {
      const PrimeLevel pp(p, n);
      const auto constructed = enumerate_dagger_B(pp);
      const auto brute = enumerate_dagger_B_bruteforce(pp);
      if (constructed != brute) {
        detail = "constructed parameter list differs from brute force";
        return false;
      }
      if (Bigint(constructed.size()) != 8 * closed_form_03(pp)) {
        detail = "cardinality formula failed at p=" + std::to_string(p) +
                 " N=" + std::to_string(n);
        return false;
      }
      const DaggerCIndex index = build_dagger_c_index(pp);
      std::map<ExponentTriple, int> fibers;
      for (const ParamTriple& t : constructed) ++fibers[bc_map(t, pp, index)];
      if (fibers.size() != enumerate_dagger_C(pp).size()) {
        detail = "projection misses balanced triples";
        return false;
      }
      for (const auto& [image, size] : fibers) {
        if (size != 8) {
          detail = "a fiber has " + std::to_string(size) + " elements";
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion4(std::string& detail) {
  const PrimeLevel pp(3, 2);
  const auto deg = [&pp](int g, int r) {
    return count_numberings(standard_graph(g, r), pp).total;
  };
  const auto pow_b = [](long long base, int e) {
    return ipow(Bigint(base), static_cast<unsigned>(e));
  };
  for (int g = 2; g <= 6; ++g) {
    const Bigint want = pow_b(2, g - 1) + pow_b(3, g - 1) + pow_b(6, g - 1);
    if (deg(g, 0) != want) {
      detail = "(g,0) failed at g=" + std::to_string(g);
      return false;
    }
  }
  for (int g = 1; g <= 6; ++g) {
    const Bigint want = pow_b(3, g - 1) + 4 * pow_b(6, g - 1);
    if (deg(g, 1) != want) {
      detail = "(g,1) failed at g=" + std::to_string(g);
      return false;
    }
  }
  for (int r = 1; r <= 6; ++r) {
    const Bigint numerator = 1 + 2 * pow_b(4, r + 1);
    if (numerator % 3 != 0 || deg(0, r + 2) != numerator / 3) {
      detail = "(0,r+2) failed at r=" + std::to_string(r);
      return false;
    }
  }
  for (int g = 1; g <= 6; ++g) {
    for (int r = 1; r <= 6; ++r) {
      const Bigint want = pow_b(3, g - 1) + pow_b(6, g - 1) * pow_b(4, r + 1);
      if (deg(g, r + 1) != want) {
        detail = "(g,r+1) failed at g=" + std::to_string(g) +
                 " r=" + std::to_string(r);
        return false;
      }
    }
  }
  return true;
}

bool criterion5(std::string& detail) {
  for (const PrimeLevel& pp : closed_form_grid()) {
    const Bigint genus2 = count_numberings(standard_graph(2, 0), pp).total;
    if (genus2 != closed_form_03(pp)) {
      detail = "deg(2,0) != (0,3) closed form at p=" + std::to_string(pp.p) +
               " N=" + std::to_string(pp.N);
      return false;
    }
  }
  for (const long long p : {3ll, 5ll, 7ll}) {
    for (int n = 1; n <= 2; ++n) {
      const Bigint lower = count_numberings(standard_graph(2, 0),
                                            PrimeLevel(p, n)).total;
      const Bigint upper = count_numberings(standard_graph(2, 0),
                                            PrimeLevel(p, n + 1)).total;
      if (3 * upper != (p * p * p + 2 * p) * lower) {
        detail = "level ratio failed at p=" + std::to_string(p) +
                 " N=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool criterion6(std::string& detail) {
  for (const PrimeLevel pp : {PrimeLevel(3, 1), PrimeLevel(5, 1),
                              PrimeLevel(7, 1), PrimeLevel(3, 2)}) {
    long long mismatches = 0;
    for (long long a = 1; a <= pp.q; ++a) {
      for (long long b = 1; b <= pp.q; ++b) {
        for (long long c = 1; c <= pp.q; ++c) {
          const bool oracle = has_full_root_functions(HGOperator(a, b, c, pp));
          if (oracle != in_dagger_B({a, b, c}, pp)) ++mismatches;
        }
      }
    }
    if (mismatches != 0) {
      detail = std::to_string(mismatches) + " mismatches at p=" +
               std::to_string(pp.p) + " N=" + std::to_string(pp.N);
      return false;
    }
  }
  return true;
}

bool criterion7(std::string& detail) {
  int gluing_checked = 0;
  int tails_checked = 0;
  for (const PrimeLevel pp : {PrimeLevel(3, 2), PrimeLevel(5, 1)}) {
    const FusionRing ring = build_fusion_ring(pp);

    const TQFTReport structural = tqft_checks(ring);
    if (!structural.all_pass()) {
      detail = "structural: " + structural.failures.front();
      return false;
    }

    using Radii = std::vector<RadiusClass>;
    const auto deg = [&ring](int g, const Radii& radii) {
      return degree_exact(ring, g, radii);
    };
    const auto join = [](Radii x, const Radii& y) {
      x.insert(x.end(), y.begin(), y.end());
      return x;
    };
    const auto separating = [&](int g1, const Radii& r1, int g2,
                                const Radii& r2, int tubes) {
      Bigint lhs = 0;
      std::vector<int> mu(tubes, 0);
      while (true) {
        Radii shared;
        for (const int index : mu) shared.push_back(ring.basis[index]);
        lhs += deg(g1, join(r1, shared)) * deg(g2, join(r2, shared));
        int pos = tubes - 1;
        while (pos >= 0 && ++mu[pos] == ring.dim()) mu[pos--] = 0;
        if (pos < 0) break;
      }
      ++gluing_checked;
      return lhs == deg(g1 + g2 + tubes - 1, join(r1, r2));
    };
    const auto nonseparating = [&](int g, const Radii& rho) {
      Bigint lhs = 0;
      for (int index = 0; index < ring.dim(); ++index) {
        lhs += deg(g, join(rho, {ring.basis[index], ring.basis[index]}));
      }
      ++gluing_checked;
      return lhs == deg(g + 1, rho);
    };

    const RadiusClass e0 = ring.basis[0];
    const RadiusClass eh = ring.basis[ring.dim() / 2];
    const RadiusClass el = ring.basis[ring.dim() - 1];
    bool ok = true;
    ok = ok && separating(0, {e0, e0}, 0, {e0, e0}, 1);
    ok = ok && separating(0, {e0, eh}, 0, {eh, el}, 1);
    ok = ok && separating(0, {el, el}, 0, {el, el}, 1);
    ok = ok && separating(1, {eh}, 0, {eh, el}, 1);
    ok = ok && separating(1, {}, 1, {}, 1);
    ok = ok && separating(1, {el}, 1, {}, 1);
    ok = ok && separating(0, {e0, eh}, 1, {}, 1);
    ok = ok && separating(0, {e0, e0}, 0, {eh, eh}, 2);
    ok = ok && separating(1, {}, 0, {e0, el}, 2);
    ok = ok && nonseparating(0, {e0, e0});
    ok = ok && nonseparating(0, {eh, el});
    ok = ok && nonseparating(1, {eh});
    ok = ok && nonseparating(1, {});
    if (!ok) {
      detail = "a gluing identity failed at p=" + std::to_string(pp.p) +
               " N=" + std::to_string(pp.N);
      return false;
    }

    const std::vector<std::pair<int, Radii>> tail_configs = {
        {2, {}},           {1, {e0}},         {1, {el}},
        {0, {e0, eh, el}}, {0, {el, el, eh}},
    };
    for (const auto& [g, radii] : tail_configs) {
      ++tails_checked;
      if (!forgetting_tails_check(ring, g, radii)) {
        detail = "forgetting a tail changed a degree";
        return false;
      }
    }
  }
  if (gluing_checked < 20 || tails_checked < 10) {
    detail = "only " + std::to_string(gluing_checked) + " gluing and " +
             std::to_string(tails_checked) + " tail configurations";
    return false;
  }
  return true;
}

bool criterion8(std::string& detail) {
  for (const PrimeLevel pp : {PrimeLevel(3, 2), PrimeLevel(5, 1)}) {
    for (const GraphType type :
         {GraphType{2, 0}, GraphType{0, 4}, GraphType{1, 2}, GraphType{3, 0}}) {
      if (!independence_check(type.genus, type.marked, pp)) {
        detail = "(" + std::to_string(type.genus) + "," +
                 std::to_string(type.marked) + ") at p=" +
                 std::to_string(pp.p) + " N=" + std::to_string(pp.N);
        return false;
      }
    }
  }
  return true;
}

bool criterion9(std::string& detail) {
  for (const PrimeLevel pp :
       {PrimeLevel(3, 2), PrimeLevel(5, 1), PrimeLevel(5, 2)}) {
    const FusionRing ring = build_fusion_ring(pp);
    const CharacterTable table = characters(ring);
    for (int g = 0; g <= 4; ++g) {
      for (int r = 0; r <= 2; ++r) {
        if (2 * g - 2 + r <= 0) continue;
        const CountResult result = count_numberings(
            standard_graph(g, r), pp, std::nullopt, true);
        std::vector<int> tuple(r, 0);
        while (true) {
          std::vector<RadiusClass> radii;
          std::vector<long long> key;
          for (const int index : tuple) {
            radii.push_back(ring.basis[index]);
            key.push_back(ring.basis[index].lambda);
          }
          const auto found = result.per_radius.find(key);
          const Bigint exact =
              found == result.per_radius.end() ? Bigint(0) : found->second;
          const double estimate = degree_char_sum(table, ring, g, radii);
          const double want = static_cast<double>(exact);
          if (std::abs(estimate - want) > kTol * (1.0 + want)) {
            std::ostringstream s;
            s << "gap " << std::abs(estimate - want) << " at p=" << pp.p
              << " N=" << pp.N << " g=" << g << " r=" << r;
            detail = s.str();
            return false;
          }
          int pos = r - 1;
          while (pos >= 0 && ++tuple[pos] == ring.dim()) tuple[pos--] = 0;
          if (pos < 0) break;
        }
      }
    }
  }
  return true;
}

bool criterion10(std::string& detail) {
  for (const long long p : {3ll, 5ll, 7ll, 13ll}) {
    const PrimeLevel pp(p, 1);
    for (int g = 0; g <= 4; ++g) {
      for (int r = 0; r <= 3; ++r) {
        if (2 * g - 2 + r <= 0) continue;
        const Bigint exact =
            count_numberings(standard_graph(g, r), pp).total;
        const double want = static_cast<double>(exact);
        const double trig = verlinde_N1(p, g, r);
        if (std::abs(trig - want) > kTol * (1.0 + std::abs(want))) {
          std::ostringstream s;
          s << "p=" << p << " g=" << g << " r=" << r << ": " << trig
            << " vs " << want;
          detail = s.str();
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion11(std::string& detail) {
  for (const PrimeLevel pp : {PrimeLevel(3, 1), PrimeLevel(5, 1),
                              PrimeLevel(3, 2), PrimeLevel(5, 2)}) {
    if (dagger_C_via_lattice(pp) != Bigint(enumerate_dagger_C(pp).size())) {
      detail = "lattice count of balanced triples differs at p=" +
               std::to_string(pp.p) + " N=" + std::to_string(pp.N);
      return false;
    }
  }
  for (const long long p : {3ll, 5ll}) {
    for (const int n : {1, 2}) {
      const PrimeLevel pp(p, n);
      for (const GraphType type : {GraphType{0, 3}, GraphType{1, 1}}) {
        const ClutchingData c = standard_graph(type.genus, type.marked);
        if (edge_count_via_lattice(c, pp) != count_numberings(c, pp).total) {
          detail = "graph lattice count differs for (" +
                   std::to_string(type.genus) + "," +
                   std::to_string(type.marked) + ")";
          return false;
        }
      }
    }
  }
  for (const int n : {1, 2}) {
    const std::vector<long long> primes =
        n == 1 ? std::vector<long long>{3, 5, 7} : std::vector<long long>{3, 5};
    const CountingFitReport report = verify_thm5(0, 3, primes, n);
    if (report.expected_degree != 3 * n || !report.degree_matches) {
      detail = "counting function degree is not 3N at N=" + std::to_string(n);
      return false;
    }
    if (!report.period_even) {
      detail = "counting function period is odd at N=" + std::to_string(n);
      return false;
    }
    if (!report.all_match) {
      detail = "counting function misses a held-out prime at N=" +
               std::to_string(n);
      return false;
    }
    for (const auto& row : report.rows) {
      if (row.actual != closed_form_03(PrimeLevel(row.p, n))) {
        detail = "held-out comparison used a wrong reference";
        return false;
      }
    }
  }
  return true;
}

bool criterion12(std::string& detail) {
  if (diff_op_count(2, PrimeLevel(3, 2)) != 891) {
    detail = "the (3,2) genus-2 operator count is not 891";
    return false;
  }
  if (diff_op_count(3, PrimeLevel(3, 2)) != 35721) {
    detail = "the (3,2) genus-3 operator count is not 3^6 * 49";
    return false;
  }
  for (const PrimeLevel pp : {PrimeLevel(3, 1), PrimeLevel(3, 2),
                              PrimeLevel(5, 1), PrimeLevel(5, 2),
                              PrimeLevel(7, 1)}) {
    for (int g = 2; g <= 3; ++g) {
      const Bigint base = count_numberings(standard_graph(g, 0), pp).total;
      const Bigint scale = ipow(Bigint(pp.p), static_cast<unsigned>(g * pp.N));
      if (diff_op_count(g, pp) != scale * base) {
        detail = "scaling failed at p=" + std::to_string(pp.p) +
                 " N=" + std::to_string(pp.N) + " g=" + std::to_string(g);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int index;
    std::string label;
    bool (*check)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, "three-pointed degree equals its closed form", criterion1},
      {2, "golden balanced-triple list at (3,2)", criterion2},
      {3, "parameter-triple cardinality, fibers, construction", criterion3},
      {4, "closed forms for small types at (3,2)", criterion4},
      {5, "genus-2 closed form and level ratio", criterion5},
      {6, "series oracle equals the parameter set", criterion6},
      {7, "fusion and gluing identities", criterion7},
      {8, "graph independence of counts", criterion8},
      {9, "character sums approximate exact degrees", criterion9},
      {10, "level-one trigonometric totals", criterion10},
      {11, "lattice-point identities and counting function", criterion11},
      {12, "differential operator counts and scaling", criterion12},
  };
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = criterion.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    report(criterion.index, criterion.label, pass, detail);
  }
  return failures == 0 ? 0 : 1;
}
