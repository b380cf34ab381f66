#include "dormant/triples.hpp"

#include <algorithm>
#include <string>

namespace dormant {

namespace {

void check_budget(const PrimeLevel& pp, long long max_q, const char* op) {
  if (pp.q > max_q) {
    throw ResourceLimit(std::string(op) + ": q = " + std::to_string(pp.q) +
                        " exceeds the enumeration budget " +
                        std::to_string(max_q));
  }
}

std::string triple_str(long long x, long long y, long long z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
         std::to_string(z) + ")";
}

}  // namespace

bool in_C(const ExponentTriple& t, int n_prime, const PrimeLevel& pp) {
  const long long m = pp.pow_p(n_prime);
  const long long s1 = t.s1, s2 = t.s2, s3 = t.s3;
  if (s1 < 0 || s1 >= m || s2 < 0 || s2 >= m || s3 < 0 || s3 >= m) return false;
  if (s1 + s2 + s3 > m - 2) return false;
  return std::llabs(s2 - s3) <= s1 && s1 <= s2 + s3;
}

bool in_dagger_C(const ExponentTriple& t, const PrimeLevel& pp) {
  if (!in_C(t, pp.N, pp)) return false;
  for (int n = 1; n < pp.N; ++n) {
    const long long m = pp.pow_p(n);
    const long long r1 = reduce(t.s1, n, pp);
    const long long r2 = reduce(t.s2, n, pp);
    const long long r3 = reduce(t.s3, n, pp);
    bool found = false;
    for (int mask = 0; mask < 8 && !found; ++mask) {
      const long long u1 = (mask & 1) ? m - 1 - r1 : r1;
      const long long u2 = (mask & 2) ? m - 1 - r2 : r2;
      const long long u3 = (mask & 4) ? m - 1 - r3 : r3;
      found = in_C(ExponentTriple{u1, u2, u3}, n, pp);
    }
    if (!found) return false;
  }
  return true;
}

std::vector<ExponentTriple> enumerate_dagger_C(const PrimeLevel& pp,
                                               long long max_q) {
  check_budget(pp, max_q, "enumerate_dagger_C");
  std::vector<ExponentTriple> out;
  // Coordinates are bounded by the sum condition: 2 s_i <= q - 2.
  const long long hi = (pp.q - 2) / 2;
  for (long long s1 = 0; s1 <= hi; ++s1) {
    for (long long s2 = 0; s2 <= hi; ++s2) {
      const long long lo3 = std::max<long long>(0, std::max(s1 - s2, s2 - s1));
      const long long hi3 = std::min(s1 + s2, pp.q - 2 - s1 - s2);
      for (long long s3 = lo3; s3 <= hi3; ++s3) {
        ExponentTriple t{s1, s2, s3};
        if (in_dagger_C(t, pp)) out.push_back(t);
      }
    }
  }
  return out;
}

bool in_B(const ParamTriple& t, int n_prime, const PrimeLevel& pp) {
  const long long m = pp.pow_p(n_prime);
  const long long a = t.a, b = t.b, c = t.c;
  if (a < 1 || a > m || b < 1 || b > m || c < 1 || c > m) return false;
  return (a < c && c <= b) || (b < c && c <= a);
}

bool in_dagger_B(const ParamTriple& t, const PrimeLevel& pp) {
  for (int n = pp.N; n >= 1; --n) {
    const ParamTriple r{reduce_prime(t.a, n, pp), reduce_prime(t.b, n, pp),
                        reduce_prime(t.c, n, pp)};
    if (!in_B(r, n, pp)) return false;
  }
  return true;
}

std::array<RadiusClass, 3> xi(const ParamTriple& t, const PrimeLevel& pp) {
  return {radius_class(1 - t.c, pp), radius_class(t.c - t.a - t.b, pp),
          radius_class(t.b - t.a, pp)};
}

std::array<RadiusClass, 3> zeta(const ExponentTriple& t, const PrimeLevel& pp) {
  return {radius_of_svalue(t.s1, pp), radius_of_svalue(t.s2, pp),
          radius_of_svalue(t.s3, pp)};
}

DaggerCIndex build_dagger_c_index(const PrimeLevel& pp, long long max_q) {
  DaggerCIndex index;
  for (const ExponentTriple& t : enumerate_dagger_C(pp, max_q)) {
    const auto rho = zeta(t, pp);
    index.emplace(std::array<long long, 3>{rho[0].lambda, rho[1].lambda,
                                           rho[2].lambda},
                  t);
  }
  return index;
}

ExponentTriple bc_map(const ParamTriple& t, const PrimeLevel& pp,
                      const DaggerCIndex& index) {
  if (!in_dagger_B(t, pp)) {
    throw DomainError("bc_map: " + triple_str(t.a, t.b, t.c) +
                      " is not in dagger-B");
  }
  const auto rho = xi(t, pp);
  const auto it = index.find(
      std::array<long long, 3>{rho[0].lambda, rho[1].lambda, rho[2].lambda});
  if (it == index.end()) {
    throw DomainError("bc_map: no balanced triple with the radii of " +
                      triple_str(t.a, t.b, t.c));
  }
  return it->second;
}

ExponentTriple bc_map(const ParamTriple& t, const PrimeLevel& pp) {
  return bc_map(t, pp, build_dagger_c_index(pp));
}

namespace {

bool digits_in_range(const std::array<long long, 3>& r, const PrimeLevel& pp) {
  return r[0] >= 0 && r[0] < pp.p && r[1] >= 0 && r[1] < pp.p && r[2] >= 0 &&
         r[2] < pp.p;
}

bool first_digit_ok(const std::array<long long, 3>& r) {
  return r[0] < r[1] && r[1] <= r[2];
}

bool later_digit_ok(const std::array<long long, 3>& r) {
  return (r[0] <= r[1] && r[1] <= r[2]) || (r[0] > r[1] && r[1] > r[2]);
}

}  // namespace

ParamTriple delta_construct(const std::vector<std::array<long long, 3>>& digits,
                            int variant, const PrimeLevel& pp) {
  if (variant != 1 && variant != 2) {
    throw ParameterError("delta_construct: variant must be 1 or 2");
  }
  if (static_cast<int>(digits.size()) != pp.N) {
    throw ParameterError("delta_construct: expected " + std::to_string(pp.N) +
                         " digit vectors, got " +
                         std::to_string(digits.size()));
  }
  for (size_t j = 0; j < digits.size(); ++j) {
    if (!digits_in_range(digits[j], pp)) {
      throw ParameterError("delta_construct: digit vector " +
                           std::to_string(j) + " has entries outside [0, p-1]");
    }
    const bool ok = j == 0 ? first_digit_ok(digits[j]) : later_digit_ok(digits[j]);
    if (!ok) {
      throw ParameterError("delta_construct: digit vector " +
                           std::to_string(j) + " violates its order pattern");
    }
  }

  long long q1 = 1 + digits[0][0];
  long long q2 = 1 + digits[0][2];
  long long q3 = 1 + digits[0][1];
  for (int j = 1; j < pp.N; ++j) {
    const long long w = pp.pow_p(j);
    const auto& r = digits[j];
    if (q1 < q3 && q3 <= q2) {
      q1 += w * r[0];
      q2 += w * r[2];
      q3 += w * r[1];
    } else if (q2 < q3 && q3 <= q1) {
      q1 += w * r[2];
      q2 += w * r[0];
      q3 += w * r[1];
    } else {
      throw DomainError("delta_construct: intermediate triple " +
                        triple_str(q1, q2, q3) + " lost its order pattern");
    }
  }
  return variant == 1 ? ParamTriple{q1, q2, q3} : ParamTriple{q2, q1, q3};
}

std::vector<ParamTriple> enumerate_dagger_B(const PrimeLevel& pp,
                                            long long max_q) {
  check_budget(pp, max_q, "enumerate_dagger_B");
  std::vector<std::array<long long, 3>> first, later;
  for (long long r1 = 0; r1 < pp.p; ++r1) {
    for (long long r2 = 0; r2 < pp.p; ++r2) {
      for (long long r3 = 0; r3 < pp.p; ++r3) {
        const std::array<long long, 3> r{r1, r2, r3};
        if (first_digit_ok(r)) first.push_back(r);
        if (later_digit_ok(r)) later.push_back(r);
      }
    }
  }

  std::vector<ParamTriple> out;
  std::vector<std::array<long long, 3>> digits(pp.N);
  // Odometer over the later-digit choices.
  std::vector<size_t> pos(pp.N > 1 ? pp.N - 1 : 0, 0);
  for (const auto& f : first) {
    digits[0] = f;
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      for (int j = 1; j < pp.N; ++j) digits[j] = later[pos[j - 1]];
      out.push_back(delta_construct(digits, 1, pp));
      out.push_back(delta_construct(digits, 2, pp));
      int j = 0;
      for (; j < pp.N - 1; ++j) {
        if (++pos[j] < later.size()) break;
        pos[j] = 0;
      }
      if (j == pp.N - 1) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ParamTriple> enumerate_dagger_B_bruteforce(const PrimeLevel& pp,
                                                       long long max_q) {
  check_budget(pp, max_q, "enumerate_dagger_B_bruteforce");
  std::vector<ParamTriple> out;
  for (long long a = 1; a <= pp.q; ++a) {
    for (long long b = 1; b <= pp.q; ++b) {
      for (long long c = 1; c <= pp.q; ++c) {
        const ParamTriple t{a, b, c};
        if (in_dagger_B(t, pp)) out.push_back(t);
      }
    }
  }
  return out;
}

std::vector<long long> svalue_alphabet(const PrimeLevel& pp) {
  std::vector<long long> out;
  for (long long s = 0; s <= (pp.q - 2) / 2; ++s) {
    if ((2 * s + 1) % pp.p == 0) continue;
    // Every candidate radius occurs, witnessed by the triple (s, s, 0).
    if (in_dagger_C(ExponentTriple{s, s, 0}, pp)) out.push_back(s);
  }
  return out;
}

}  // namespace dormant
