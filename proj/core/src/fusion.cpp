#include "dormant/fusion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace dormant {

int FusionRing::index_of(RadiusClass rho) const {
  const auto it = std::lower_bound(
      basis.begin(), basis.end(), rho,
      [](RadiusClass x, RadiusClass y) { return x.lambda < y.lambda; });
  if (it == basis.end() || it->lambda != rho.lambda) {
    throw DomainError("radius " + std::to_string(rho.lambda) +
                      " is not a basis element");
  }
  return static_cast<int>(it - basis.begin());
}

FusionRing build_fusion_ring(const PrimeLevel& pp) {
  FusionRing ring{pp, enumerate_radii(pp), {}, {}};
  ring.svalues.reserve(ring.basis.size());
  for (const RadiusClass& rho : ring.basis) {
    ring.svalues.push_back(svalue_of_radius(rho, pp));
  }

  // The paired s-values must be exactly the coordinates occurring in
  // balanced triples.
  auto sorted = ring.svalues;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != svalue_alphabet(pp)) {
    throw Error("fusion basis does not match the balanced-triple alphabet");
  }

  const int d = ring.dim();
  ring.constants.assign(static_cast<size_t>(d) * d * d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const ExponentTriple t{ring.svalues[i], ring.svalues[j],
                               ring.svalues[k]};
        ring.constants[(static_cast<size_t>(i) * d + j) * d + k] =
            in_dagger_C(t, pp) ? 1 : 0;
      }
    }
  }
  return ring;
}

std::vector<Bigint> multiply(const FusionRing& ring, const std::vector<Bigint>& x,
                             const std::vector<Bigint>& y) {
  const int d = ring.dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d) {
    throw ParameterError("multiply: vectors must match the basis dimension");
  }
  std::vector<Bigint> z(d, Bigint(0));
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      const Bigint w = x[i] * y[j];
      for (int k = 0; k < d; ++k) {
        if (ring.structure_constant(i, j, k)) z[k] += w;
      }
    }
  }
  return z;
}

std::vector<Bigint> casimir(const FusionRing& ring) {
  const int d = ring.dim();
  std::vector<Bigint> out(d, Bigint(0));
  for (int a = 0; a < d; ++a) {
    for (int k = 0; k < d; ++k) {
      if (ring.structure_constant(a, a, k)) out[k] += 1;
    }
  }
  return out;
}

CharacterTable characters(const FusionRing& ring, double tol,
                          std::uint64_t seed) {
  const int d = ring.dim();
  std::vector<Eigen::MatrixXd> mats(d, Eigen::MatrixXd::Zero(d, d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        mats[i](k, j) = ring.structure_constant(i, j, k);
      }
    }
  }

  for (int attempt = 0; attempt < 6; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> unif(0.25, 1.0);
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) combo += unif(rng) * mats[i];

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(combo);
    if (solver.info() != Eigen::Success) continue;

    CharacterTable table;
    table.chi.resize(d, std::vector<double>(d, 0.0));
    for (int k = 0; k < d; ++k) {
      const Eigen::VectorXd v = solver.eigenvectors().col(k);
      for (int i = 0; i < d; ++i) {
        table.chi[k][i] = v.dot(mats[i] * v);
      }
    }

    double maxval = 1.0;
    for (const auto& row : table.chi) {
      for (double x : row) maxval = std::max(maxval, std::abs(x));
    }
    double residual = 0.0;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (const auto& row : table.chi) {
          double sum = 0.0;
          for (int k = 0; k < d; ++k) {
            if (ring.structure_constant(i, j, k)) sum += row[k];
          }
          residual = std::max(residual, std::abs(row[i] * row[j] - sum));
        }
      }
    }
    table.residual = residual;
    if (residual > tol * (1.0 + maxval * maxval)) continue;

    table.casimir_values.resize(d);
    for (int k = 0; k < d; ++k) {
      double cas = 0.0;
      for (int i = 0; i < d; ++i) cas += table.chi[k][i] * table.chi[k][i];
      table.casimir_values[k] = cas;
    }

    // Canonical order: descending casimir value, then lexicographic.
    std::vector<int> perm(d);
    for (int k = 0; k < d; ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
      if (table.casimir_values[x] != table.casimir_values[y]) {
        return table.casimir_values[x] > table.casimir_values[y];
      }
      return table.chi[x] > table.chi[y];
    });
    CharacterTable sorted;
    sorted.residual = table.residual;
    for (int k : perm) {
      sorted.chi.push_back(table.chi[k]);
      sorted.casimir_values.push_back(table.casimir_values[k]);
    }
    return sorted;
  }
  throw DegenerateSpectrum(
      "characters: no generic combination separated the spectrum");
}

double degree_char_sum(const CharacterTable& table, const FusionRing& ring,
                       int genus, const std::vector<RadiusClass>& radii) {
  const int d = ring.dim();
  std::vector<int> idx;
  idx.reserve(radii.size());
  for (const RadiusClass& rho : radii) idx.push_back(ring.index_of(rho));

  double total = 0.0;
  for (int k = 0; k < d; ++k) {
    const double cas = table.casimir_values[k];
    double term = std::pow(cas, genus - 1);
    for (int i : idx) term *= table.chi[k][i];
    total += term;
  }
  return total;
}

Bigint degree_exact(const FusionRing& ring, int genus,
                    const std::vector<RadiusClass>& radii) {
  const ClutchingData graph =
      standard_graph(genus, static_cast<int>(radii.size()));
  return count_numberings(graph, ring.pp, radii).total;
}

Bigint degree_char(const FusionRing& ring, int genus,
                   const std::vector<RadiusClass>& radii, double tol,
                   std::uint64_t seed) {
  const CharacterTable table = characters(ring, tol, seed);
  const double value = degree_char_sum(table, ring, genus, radii);
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > tol * (1.0 + std::abs(rounded))) {
    throw RoundingGap("degree_char: value " + std::to_string(value) +
                      " is not close to an integer");
  }
  return Bigint(static_cast<long long>(rounded));
}

double verlinde_N1(long long p, int genus, int marked) {
  const long double pi = 3.141592653589793238462643383279502884L;
  long double sum = 0.0L;
  for (long long j = 1; j < p; ++j) {
    const long double s = std::sin(static_cast<long double>(j) * pi / p);
    const long double c = std::cos(static_cast<long double>(j) * pi / p);
    const long double sign = (j % 2 == 0) ? 1.0L : -1.0L;
    long double term = std::pow(1.0L - sign * c, static_cast<long double>(marked));
    term /= std::pow(s, 2.0L * (genus - 1 + marked));
    sum += term;
  }
  const long double scale =
      std::pow(static_cast<long double>(p), static_cast<long double>(genus - 1)) /
      std::pow(2.0L, static_cast<long double>(2 * genus - 1 + marked));
  return static_cast<double>(scale * sum);
}

namespace {

RadiusClass sample_radius(const FusionRing& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, ring.dim() - 1);
  return ring.basis[pick(rng)];
}

std::vector<RadiusClass> sample_tuple(const FusionRing& ring, int r,
                                      std::mt19937_64& rng) {
  std::vector<RadiusClass> out;
  for (int i = 0; i < r; ++i) out.push_back(sample_radius(ring, rng));
  return out;
}

std::vector<std::vector<RadiusClass>> all_tuples(const FusionRing& ring, int r) {
  std::vector<std::vector<RadiusClass>> out{{}};
  for (int i = 0; i < r; ++i) {
    std::vector<std::vector<RadiusClass>> next;
    for (const auto& t : out) {
      for (const RadiusClass& rho : ring.basis) {
        auto u = t;
        u.push_back(rho);
        next.push_back(u);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TQFTReport tqft_checks(const FusionRing& ring, int trials, std::uint64_t seed) {
  TQFTReport report;
  std::mt19937_64 rng(seed);
  const int d = ring.dim();
  auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };

  // Unit element: the class of 1/2 sits at index 0 and multiplies trivially.
  ++report.checks_run;
  if (ring.index_of(epsilon(ring.pp)) != 0) {
    fail("unit: epsilon is not the first basis element");
  }
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (ring.structure_constant(0, j, k) != (j == k ? 1 : 0)) {
        fail("unit: epsilon * e_" + std::to_string(j) + " is not e_" +
             std::to_string(j));
      }
    }
  }

  // Full symmetry of the structure constants.
  ++report.checks_run;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const auto n = ring.structure_constant(i, j, k);
        if (n != ring.structure_constant(j, i, k) ||
            n != ring.structure_constant(i, k, j)) {
          fail("symmetry: constants are not symmetric at (" +
               std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + ")");
        }
      }
    }
  }

  // Associativity, as exact integer identities.
  ++report.checks_run;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          long long lhs = 0, rhs = 0;
          for (int m = 0; m < d; ++m) {
            lhs += static_cast<long long>(ring.structure_constant(i, j, m)) *
                   ring.structure_constant(m, k, l);
            rhs += static_cast<long long>(ring.structure_constant(j, k, m)) *
                   ring.structure_constant(i, m, l);
          }
          if (lhs != rhs) {
            fail("associativity fails at (" + std::to_string(i) + "," +
                 std::to_string(j) + "," + std::to_string(k) + "," +
                 std::to_string(l) + ")");
          }
        }
      }
    }
  }

  // The pairing [beta == involute(alpha)] is the identity matrix.
  ++report.checks_run;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const bool paired = ring.basis[j] == involute(ring.basis[i]);
      if (paired != (i == j)) {
        fail("pairing matrix is not the identity");
      }
    }
  }

  // Cylinder: a three-holed sphere with a unit leg is a delta function.
  ++report.checks_run;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Bigint deg = degree_exact(
          ring, 0, {ring.basis[i], ring.basis[j], epsilon(ring.pp)});
      if (deg != Bigint(i == j ? 1 : 0)) {
        fail("cylinder: deg(rho_i, rho_j, eps) != [i == j] at (" +
             std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  // Torus value: sum over the diagonal with two unit legs.
  ++report.checks_run;
  {
    Bigint total = 0;
    for (int i = 0; i < d; ++i) {
      total += degree_exact(ring, 0,
                            {ring.basis[i], involute(ring.basis[i]),
                             epsilon(ring.pp), epsilon(ring.pp)});
    }
    if (total != Bigint(d)) {
      fail("torus: diagonal sum != dimension");
    }
  }

  // Symmetry of degrees under permutations of the inputs.
  for (int t = 0; t < trials; ++t) {
    ++report.checks_run;
    std::uniform_int_distribution<int> pick_g(0, 2);
    const int g = pick_g(rng);
    std::uniform_int_distribution<int> pick_r(g == 0 ? 3 : 1, 4);
    const int r = pick_r(rng);
    auto tuple = sample_tuple(ring, r, rng);
    auto shuffled = tuple;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (degree_exact(ring, g, tuple) != degree_exact(ring, g, shuffled)) {
      fail("degree is not symmetric in its inputs (trial " +
           std::to_string(t) + ")");
    }
  }

  // Involution invariance (the involution is the identity).
  for (int t = 0; t < std::min(trials, 5); ++t) {
    ++report.checks_run;
    auto tuple = sample_tuple(ring, 3, rng);
    auto dual = tuple;
    for (auto& rho : dual) rho = involute(rho);
    if (degree_exact(ring, 0, tuple) != degree_exact(ring, 0, dual)) {
      fail("degree changed under the involution (trial " + std::to_string(t) +
           ")");
    }
  }

  // Gluing: contract l legs between two pieces.
  for (int t = 0; t < trials; ++t) {
    ++report.checks_run;
    std::uniform_int_distribution<int> pick_l(1, 2);
    std::uniform_int_distribution<int> pick_g(0, 1);
    const int l = pick_l(rng);
    const int g1 = pick_g(rng), g2 = pick_g(rng);
    const int min1 = std::max(1, 2 - 2 * g1 + 1 - l);
    const int min2 = std::max(1, 2 - 2 * g2 + 1 - l);
    std::uniform_int_distribution<int> pick_e1(min1, min1 + 1);
    std::uniform_int_distribution<int> pick_e2(min2, min2 + 1);
    const int e1 = pick_e1(rng), e2 = pick_e2(rng);
    const auto rho1 = sample_tuple(ring, e1, rng);
    const auto rho2 = sample_tuple(ring, e2, rng);

    Bigint lhs = 0;
    for (const auto& mu : all_tuples(ring, l)) {
      auto left = rho1;
      left.insert(left.end(), mu.begin(), mu.end());
      auto right = rho2;
      for (const auto& m : mu) right.push_back(involute(m));
      lhs += degree_exact(ring, g1, left) * degree_exact(ring, g2, right);
    }
    auto joined = rho1;
    joined.insert(joined.end(), rho2.begin(), rho2.end());
    const Bigint rhs = degree_exact(ring, g1 + g2 + l - 1, joined);
    if (lhs != rhs) {
      fail("gluing identity fails (trial " + std::to_string(t) + ")");
    }
  }

  // Loop closing: summing a dual pair of legs raises the genus.
  for (int t = 0; t < trials / 2 + 1; ++t) {
    ++report.checks_run;
    std::uniform_int_distribution<int> pick_g(0, 1);
    const int g = pick_g(rng);
    std::uniform_int_distribution<int> pick_r(g == 0 ? 1 : 0, 2);
    const int r = pick_r(rng);
    const auto rho = sample_tuple(ring, r, rng);
    Bigint lhs = 0;
    for (const RadiusClass& mu : ring.basis) {
      auto full = rho;
      full.push_back(mu);
      full.push_back(involute(mu));
      lhs += degree_exact(ring, g, full);
    }
    if (lhs != degree_exact(ring, g + 1, rho)) {
      fail("loop identity fails (trial " + std::to_string(t) + ")");
    }
  }

  return report;
}

bool forgetting_tails_check(const FusionRing& ring, int genus,
                            const std::vector<RadiusClass>& radii) {
  auto extended = radii;
  extended.push_back(epsilon(ring.pp));
  return degree_exact(ring, genus, extended) ==
         degree_exact(ring, genus, radii);
}

}  // namespace dormant
