#include "dormant/ehrhart.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "dormant/edgecount.hpp"

namespace dormant {

std::vector<SignVector> enumerate_sign_vectors(int N) {
  if (N < 1) throw ParameterError("sign vectors need a level N >= 1");
  std::vector<SignVector> out;
  long long total = 1;
  for (int j = 1; j < N; ++j) total *= 8;
  for (long long code = 0; code < total; ++code) {
    SignVector a;
    a.N = N;
    a.levels.assign(N, {+1, +1, +1});
    long long rest = code;
    for (int j = N - 1; j >= 1; --j) {
      const int bits = static_cast<int>(rest % 8);
      rest /= 8;
      for (int i = 0; i < 3; ++i) {
        a.levels[j - 1][i] = (bits >> (2 - i)) & 1 ? -1 : +1;
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

struct Strictness {
  bool sum_strict = false;
  std::array<bool, 3> lower_strict{};
  std::array<bool, 3> upper_strict{};
};

// Strictness profile of one level, selected by the ratios of its signs to
// the previous level's signs.
Strictness level_strictness(const std::array<int, 3>& ratios) {
  Strictness st;
  int minus = 0;
  for (int t : ratios) minus += t < 0 ? 1 : 0;
  st.sum_strict = minus <= 1;
  for (int i = 0; i < 3; ++i) {
    st.lower_strict[i] = ratios[i] < 0;
    if (minus == 0) {
      st.upper_strict[i] = false;
    } else if (minus == 3) {
      st.upper_strict[i] = true;
    } else {
      st.upper_strict[i] = ratios[i] > 0;
    }
  }
  return st;
}

void add_row(InequalitySystem& sys, const std::map<int, Rational>& coeffs,
             const Rational& rhs, bool strict) {
  LinearConstraint row;
  row.coeffs.assign(sys.dimension, Rational(0));
  for (const auto& [var, c] : coeffs) row.coeffs[var] += c;
  row.rhs = rhs;
  row.strict = strict;
  sys.rows.push_back(std::move(row));
}

// Rows of one bracketed triple condition: variables vars[0..2] (possibly
// repeated), signs of the brackets, and the strictness profile.  The bracket
// <x>_+ is x and <x>_- is 1-x, so a minus sign contributes 1 to the affine
// constant, which moves to the right-hand side.
void emit_triple_rows(InequalitySystem& sys, const std::array<int, 3>& vars,
                      const std::array<int, 3>& signs, const Strictness& st) {
  const auto shift = [&](int i) { return Rational(signs[i] < 0 ? 1 : 0); };

  std::map<int, Rational> sum;
  Rational sum_rhs(1);
  for (int i = 0; i < 3; ++i) {
    sum[vars[i]] += signs[i];
    sum_rhs -= shift(i);
  }
  add_row(sys, sum, sum_rhs, st.sum_strict);

  for (int i = 0; i < 3; ++i) {
    std::map<int, Rational> lower;
    lower[vars[i]] -= signs[i];
    add_row(sys, lower, shift(i), st.lower_strict[i]);
  }

  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    std::map<int, Rational> upper;
    upper[vars[i]] += signs[i];
    upper[vars[j]] -= signs[j];
    upper[vars[k]] -= signs[k];
    add_row(sys, upper, shift(j) + shift(k) - shift(i), st.upper_strict[i]);
  }
}

void emit_box_rows(InequalitySystem& sys) {
  for (int v = 0; v < sys.dimension; ++v) {
    add_row(sys, {{v, Rational(1)}}, Rational(1), false);
    add_row(sys, {{v, Rational(-1)}}, Rational(0), false);
  }
}

void check_sign_vector(const SignVector& a, const PrimeLevel& pp) {
  if (a.N != pp.N || static_cast<int>(a.levels.size()) != pp.N) {
    throw ParameterError("sign vector level does not match the parameters");
  }
  for (int i = 0; i < 3; ++i) {
    if (a.sign(i, pp.N) != +1) {
      throw ParameterError("top-level signs must all be +1");
    }
  }
}

std::array<int, 3> ratios_at(const SignVector& a, int j) {
  return {a.sign(0, j) * a.sign(0, j - 1), a.sign(1, j) * a.sign(1, j - 1),
          a.sign(2, j) * a.sign(2, j - 1)};
}

Strictness base_strictness() {
  return level_strictness({+1, +1, +1});
}

}  // namespace

ConstructibleSet build_P1(const SignVector& a, const PrimeLevel& pp) {
  check_sign_vector(a, pp);
  InequalitySystem sys;
  sys.dimension = 3;
  emit_triple_rows(sys, {0, 1, 2}, a.levels[0], base_strictness());
  emit_box_rows(sys);
  return ConstructibleSet{3, {std::move(sys)}};
}

ConstructibleSet build_P2(const SignVector& a, const PrimeLevel& pp) {
  check_sign_vector(a, pp);
  if (pp.N == 1) {
    return ConstructibleSet{0, {InequalitySystem{0, {}}}};
  }
  InequalitySystem sys;
  sys.dimension = 3 * (pp.N - 1);
  for (int j = 2; j <= pp.N; ++j) {
    const int base = 3 * (j - 2);
    emit_triple_rows(sys, {base, base + 1, base + 2}, a.levels[j - 1],
                     level_strictness(ratios_at(a, j)));
  }
  emit_box_rows(sys);
  return ConstructibleSet{sys.dimension, {std::move(sys)}};
}

std::pair<ConstructibleSet, ConstructibleSet> build_graph_sets(
    const ClutchingData& c, const SignVector& a, const PrimeLevel& pp) {
  check_sign_vector(a, pp);
  validate(c);
  const int ne = static_cast<int>(c.graph.edges.size());

  InequalitySystem sys1;
  sys1.dimension = ne;
  for (const auto& branches : c.vertex_branches) {
    const std::array<int, 3> vars = {branches[0].edge, branches[1].edge,
                                     branches[2].edge};
    emit_triple_rows(sys1, vars, a.levels[0], base_strictness());
  }
  emit_box_rows(sys1);
  ConstructibleSet p1{ne, {std::move(sys1)}};

  if (pp.N == 1) {
    return {std::move(p1), ConstructibleSet{0, {InequalitySystem{0, {}}}}};
  }

  InequalitySystem sys2;
  sys2.dimension = ne * (pp.N - 1);
  for (const auto& branches : c.vertex_branches) {
    for (int j = 2; j <= pp.N; ++j) {
      const int base = ne * (j - 2);
      const std::array<int, 3> vars = {base + branches[0].edge,
                                       base + branches[1].edge,
                                       base + branches[2].edge};
      emit_triple_rows(sys2, vars, a.levels[j - 1],
                       level_strictness(ratios_at(a, j)));
    }
  }
  emit_box_rows(sys2);
  return {std::move(p1), ConstructibleSet{sys2.dimension, {std::move(sys2)}}};
}

namespace {

struct IntRow {
  std::vector<long long> coeffs;
  long long rhs = 0;  // bound is rhs * m, minus 1 when strict
  bool strict = false;
};

long long to_ll(const Bigint& x) {
  if (x > std::numeric_limits<long long>::max() ||
      x < std::numeric_limits<long long>::min()) {
    throw Error("lattice_count: coefficient overflow");
  }
  return static_cast<long long>(x);
}

std::vector<IntRow> normalize_rows(const InequalitySystem& sys) {
  std::vector<IntRow> out;
  for (const LinearConstraint& row : sys.rows) {
    Bigint scale = boost::multiprecision::denominator(row.rhs);
    for (const Rational& c : row.coeffs) {
      scale = boost::multiprecision::lcm(
          scale, boost::multiprecision::denominator(c));
    }
    IntRow ir;
    ir.strict = row.strict;
    ir.rhs = to_ll(boost::multiprecision::numerator(row.rhs) * scale /
                   boost::multiprecision::denominator(row.rhs));
    for (const Rational& c : row.coeffs) {
      ir.coeffs.push_back(to_ll(boost::multiprecision::numerator(c) * scale /
                                boost::multiprecision::denominator(c)));
    }
    out.push_back(std::move(ir));
  }
  return out;
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) {
  return -floor_div(-a, b);
}

struct PieceCounter {
  int dim = 0;
  std::vector<IntRow> rows;
  std::vector<long long> lo, hi;       // per-coordinate box
  std::vector<long long> bound;        // rhs * m - strict
  std::vector<std::vector<long long>> minrest;  // per row, per depth
  long long visited = 0;
  long long max_points = 0;
  std::vector<long long> point;
  std::vector<long long> partial;
  Bigint count = 0;
  std::set<std::vector<long long>>* collect = nullptr;

  void bump() {
    if (++visited > max_points) {
      throw ResourceLimit("lattice point budget exceeded");
    }
  }

  void recurse(int depth) {
    bump();
    if (depth == dim - 1) {
      long long x_lo = lo[depth], x_hi = hi[depth];
      for (size_t r = 0; r < rows.size(); ++r) {
        const long long a = rows[r].coeffs[depth];
        const long long rem = bound[r] - partial[r];
        if (a == 0) {
          if (rem < 0) return;
        } else if (a > 0) {
          x_hi = std::min(x_hi, floor_div(rem, a));
        } else {
          x_lo = std::max(x_lo, ceil_div(-rem, -a));
        }
      }
      if (x_hi < x_lo) return;
      if (collect) {
        for (long long x = x_lo; x <= x_hi; ++x) {
          bump();
          point[depth] = x;
          collect->insert(point);
        }
      } else {
        count += Bigint(x_hi - x_lo + 1);
      }
      return;
    }
    for (long long x = lo[depth]; x <= hi[depth]; ++x) {
      bool feasible = true;
      for (size_t r = 0; r < rows.size(); ++r) {
        partial[r] += rows[r].coeffs[depth] * x;
        if (partial[r] + minrest[r][depth + 1] > bound[r]) feasible = false;
      }
      if (feasible) {
        point[depth] = x;
        recurse(depth + 1);
      }
      for (size_t r = 0; r < rows.size(); ++r) {
        partial[r] -= rows[r].coeffs[depth] * x;
      }
    }
  }
};

Bigint count_piece(const InequalitySystem& sys, long long m,
                   long long max_points,
                   std::set<std::vector<long long>>* collect) {
  PieceCounter pc;
  pc.dim = sys.dimension;
  pc.rows = normalize_rows(sys);
  pc.max_points = max_points;
  pc.collect = collect;

  for (const IntRow& row : pc.rows) {
    pc.bound.push_back(row.rhs * m - (row.strict ? 1 : 0));
  }

  if (pc.dim == 0) {
    for (size_t r = 0; r < pc.rows.size(); ++r) {
      if (pc.bound[r] < 0) return 0;
    }
    if (collect) collect->insert({});
    return 1;
  }

  constexpr long long kNone = std::numeric_limits<long long>::max();
  pc.lo.assign(pc.dim, kNone);
  pc.hi.assign(pc.dim, kNone);
  for (size_t r = 0; r < pc.rows.size(); ++r) {
    int nz = -1;
    bool single = true;
    for (int i = 0; i < pc.dim; ++i) {
      if (pc.rows[r].coeffs[i] != 0) {
        if (nz >= 0) single = false;
        nz = i;
      }
    }
    if (!single || nz < 0) continue;
    const long long a = pc.rows[r].coeffs[nz];
    if (a > 0) {
      const long long b = floor_div(pc.bound[r], a);
      if (pc.hi[nz] == kNone || b < pc.hi[nz]) pc.hi[nz] = b;
    } else {
      const long long b = ceil_div(-pc.bound[r], -a);
      if (pc.lo[nz] == kNone || b > pc.lo[nz]) pc.lo[nz] = b;
    }
  }
  for (int i = 0; i < pc.dim; ++i) {
    if (pc.lo[i] == kNone || pc.hi[i] == kNone) {
      throw Error("lattice_count: coordinate without box bounds");
    }
    if (pc.lo[i] > pc.hi[i]) return 0;
  }

  pc.minrest.assign(pc.rows.size(), std::vector<long long>(pc.dim + 1, 0));
  for (size_t r = 0; r < pc.rows.size(); ++r) {
    for (int i = pc.dim - 1; i >= 0; --i) {
      const long long a = pc.rows[r].coeffs[i];
      pc.minrest[r][i] =
          pc.minrest[r][i + 1] + std::min(a * pc.lo[i], a * pc.hi[i]);
    }
  }

  pc.point.assign(pc.dim, 0);
  pc.partial.assign(pc.rows.size(), 0);
  pc.recurse(0);
  return pc.count;
}

}  // namespace

Bigint lattice_count(const ConstructibleSet& set, long long m,
                     long long max_points) {
  if (m < 0) throw ParameterError("lattice_count: negative dilation");
  for (const InequalitySystem& sys : set.pieces) {
    if (sys.dimension != set.dimension) {
      throw ParameterError("lattice_count: piece dimension mismatch");
    }
  }
  if (set.pieces.empty()) return 0;
  if (set.pieces.size() == 1) {
    return count_piece(set.pieces.front(), m, max_points, nullptr);
  }
  std::set<std::vector<long long>> points;
  for (const InequalitySystem& sys : set.pieces) {
    count_piece(sys, m, max_points, &points);
    if (static_cast<long long>(points.size()) > max_points) {
      throw ResourceLimit("lattice point budget exceeded");
    }
  }
  return Bigint(points.size());
}

Bigint dagger_C_via_lattice(const PrimeLevel& pp) {
  Bigint total = 0;
  for (const SignVector& a : enumerate_sign_vectors(pp.N)) {
    total += lattice_count(build_P1(a, pp), pp.p - 1) *
             lattice_count(build_P2(a, pp), pp.p);
  }
  return total;
}

Bigint edge_count_via_lattice(const ClutchingData& c, const PrimeLevel& pp) {
  Bigint total = 0;
  for (const SignVector& a : enumerate_sign_vectors(pp.N)) {
    const auto [p1, p2] = build_graph_sets(c, a, pp);
    total += lattice_count(p1, pp.p - 1) * lattice_count(p2, pp.p);
  }
  return total;
}

namespace {

void trim(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational rat_pow(const Rational& base, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Bigint binomial(int n, int k) {
  Bigint out = 1;
  for (int i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

}  // namespace

Rational QuasiPolynomial::evaluate(long long t) const {
  const long long s = ((t % period) + period) % period;
  const auto& coeffs = constituents[static_cast<size_t>(s)];
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

int QuasiPolynomial::degree() const {
  int deg = 0;
  for (const auto& coeffs : constituents) {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
      if (coeffs[k] != 0) {
        deg = std::max(deg, k);
        break;
      }
    }
  }
  return deg;
}

QuasiPolynomial qp_shift(const QuasiPolynomial& f, long long delta) {
  QuasiPolynomial out;
  out.period = f.period;
  out.constituents.resize(f.constituents.size());
  const Rational d(delta);
  for (long long s = 0; s < f.period; ++s) {
    const long long src = (((s + delta) % f.period) + f.period) % f.period;
    const auto& c = f.constituents[static_cast<size_t>(src)];
    std::vector<Rational> shifted(c.size(), Rational(0));
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
      for (int mu = 0; mu <= k; ++mu) {
        shifted[mu] += c[k] * Rational(binomial(k, mu)) * rat_pow(d, k - mu);
      }
    }
    trim(shifted);
    out.constituents[static_cast<size_t>(s)] = std::move(shifted);
  }
  return out;
}

QuasiPolynomial qp_add(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  QuasiPolynomial out;
  out.period = std::lcm(f.period, g.period);
  out.constituents.resize(static_cast<size_t>(out.period));
  for (long long s = 0; s < out.period; ++s) {
    const auto& a = f.constituents[static_cast<size_t>(s % f.period)];
    const auto& b = g.constituents[static_cast<size_t>(s % g.period)];
    std::vector<Rational> sum(std::max(a.size(), b.size()), Rational(0));
    for (size_t k = 0; k < a.size(); ++k) sum[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) sum[k] += b[k];
    trim(sum);
    out.constituents[static_cast<size_t>(s)] = std::move(sum);
  }
  return out;
}

QuasiPolynomial qp_mul(const QuasiPolynomial& f, const QuasiPolynomial& g) {
  QuasiPolynomial out;
  out.period = std::lcm(f.period, g.period);
  out.constituents.resize(static_cast<size_t>(out.period));
  for (long long s = 0; s < out.period; ++s) {
    const auto& a = f.constituents[static_cast<size_t>(s % f.period)];
    const auto& b = g.constituents[static_cast<size_t>(s % g.period)];
    std::vector<Rational> prod;
    if (!a.empty() && !b.empty()) {
      prod.assign(a.size() + b.size() - 1, Rational(0));
      for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
          prod[i + j] += a[i] * b[j];
        }
      }
    }
    trim(prod);
    out.constituents[static_cast<size_t>(s)] = std::move(prod);
  }
  return out;
}

namespace {

// Exact Vandermonde interpolation through the given points.
std::vector<Rational> interpolate(
    const std::vector<std::pair<long long, Bigint>>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Rational>> mat(
      n, std::vector<Rational>(n + 1, Rational(0)));
  for (int r = 0; r < n; ++r) {
    Rational power(1);
    for (int k = 0; k < n; ++k) {
      mat[r][k] = power;
      power *= points[r].first;
    }
    mat[r][n] = Rational(points[r].second);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (mat[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error("interpolation matrix is singular");
    std::swap(mat[col], mat[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || mat[r][col] == 0) continue;
      const Rational factor = mat[r][col] / mat[col][col];
      for (int k = col; k <= n; ++k) mat[r][k] -= factor * mat[col][k];
    }
  }
  std::vector<Rational> coeffs(n);
  for (int k = 0; k < n; ++k) coeffs[k] = mat[k][n] / mat[k][k];
  trim(coeffs);
  return coeffs;
}

void minimize_period(QuasiPolynomial& f) {
  for (long long div = 1; div < f.period; ++div) {
    if (f.period % div != 0) continue;
    bool ok = true;
    for (long long s = 0; s < f.period && ok; ++s) {
      ok = f.constituents[static_cast<size_t>(s)] ==
           f.constituents[static_cast<size_t>(s % div)];
    }
    if (ok) {
      f.constituents.resize(static_cast<size_t>(div));
      f.period = div;
      return;
    }
  }
}

}  // namespace

QuasiPolynomial fit_quasipolynomial(
    const std::vector<std::pair<long long, Bigint>>& samples, int degree,
    const std::vector<long long>& period_candidates) {
  if (degree < 0) throw ParameterError("fit: negative degree");
  for (const long long period : period_candidates) {
    if (period < 1) throw ParameterError("fit: period must be positive");
    std::vector<std::vector<std::pair<long long, Bigint>>> buckets(
        static_cast<size_t>(period));
    for (const auto& sample : samples) {
      const long long s = ((sample.first % period) + period) % period;
      buckets[static_cast<size_t>(s)].push_back(sample);
    }
    bool enough = true;
    for (const auto& bucket : buckets) {
      if (static_cast<int>(bucket.size()) < degree + 1) enough = false;
    }
    if (!enough) continue;

    QuasiPolynomial qp;
    qp.period = period;
    for (const auto& bucket : buckets) {
      qp.constituents.push_back(interpolate(
          {bucket.begin(), bucket.begin() + degree + 1}));
    }
    bool consistent = true;
    for (const auto& sample : samples) {
      if (qp.evaluate(sample.first) != Rational(sample.second)) {
        consistent = false;
        break;
      }
    }
    if (consistent) {
      minimize_period(qp);
      return qp;
    }
  }
  throw NoPeriodFits("no candidate period reproduces the samples");
}

CountingFitReport verify_thm5(int genus, int marked,
                       const std::vector<long long>& primes, int N) {
  const ClutchingData graph = standard_graph(genus, marked);
  const int ne = static_cast<int>(graph.graph.edges.size());
  const PrimeLevel shape(3, N);

  const int d1 = ne;
  const int d2 = ne * (N - 1);
  const long long m1 = 8 * (d1 + 2);
  const long long m2 = 8 * (d2 + 2);

  QuasiPolynomial total;
  total.period = 1;
  total.constituents = {{}};
  for (const SignVector& a : enumerate_sign_vectors(N)) {
    const auto [p1, p2] = build_graph_sets(graph, a, shape);
    std::vector<std::pair<long long, Bigint>> s1, s2;
    for (long long m = 1; m <= m1; ++m) s1.emplace_back(m, lattice_count(p1, m));
    for (long long m = 1; m <= m2; ++m) s2.emplace_back(m, lattice_count(p2, m));
    const QuasiPolynomial h1 = fit_quasipolynomial(s1, d1);
    const QuasiPolynomial h2 = fit_quasipolynomial(s2, d2);
    total = qp_add(total, qp_mul(qp_shift(h1, -1), h2));
  }
  minimize_period(total);

  CountingFitReport report;
  report.counting_function = total;
  report.expected_degree = ne * N;
  report.degree_matches = total.degree() == report.expected_degree;
  report.period_even = total.period % 2 == 0;

  bool all = report.degree_matches && report.period_even;
  for (const long long p : primes) {
    CountingFitReport::Row row;
    row.p = p;
    const PrimeLevel pp(p, N);
    row.actual = count_numberings(graph, pp).total;
    const Rational value = total.evaluate(p);
    if (boost::multiprecision::denominator(value) == 1) {
      row.predicted = boost::multiprecision::numerator(value);
      row.match = row.predicted == row.actual;
    } else {
      row.predicted = 0;
      row.match = false;
    }
    all = all && row.match;
    report.rows.push_back(std::move(row));
  }
  report.all_match = all;
  return report;
}

}  // namespace dormant
