#include "dormant/hypergeom.hpp"

#include <string>

namespace dormant {

namespace {

long long mod_inverse(long long a, long long m) {
  long long t = 0, new_t = 1;
  long long r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    const long long quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw NotInvertible("no inverse mod " + std::to_string(m));
  return ((t % m) + m) % m;
}

struct Split {
  long long valuation;
  long long unit;  // mod q
};

Split split_valuation(long long x, const PrimeLevel& pp) {
  Split s{0, x};
  while (s.unit % pp.p == 0) {
    s.unit /= pp.p;
    ++s.valuation;
  }
  s.unit %= pp.q;
  return s;
}

}  // namespace

HGOperator::HGOperator(long long a_, long long b_, long long c_,
                       const PrimeLevel& pp_)
    : pp(pp_) {
  a = reduce_prime(a_, pp.N, pp);
  b = reduce_prime(b_, pp.N, pp);
  c = reduce_prime(c_, pp.N, pp);
}

std::array<ResidueClass, 3> exponent_differences(const HGOperator& op) {
  return {residue_class(1 - op.c, op.pp),
          residue_class(op.c - op.a - op.b, op.pp),
          residue_class(op.b - op.a, op.pp)};
}

TruncatedSeries truncated_2F1(long long a, long long b, long long c,
                              const PrimeLevel& pp) {
  a = reduce_prime(a, pp.N, pp);
  b = reduce_prime(b, pp.N, pp);
  c = reduce_prime(c, pp.N, pp);

  TruncatedSeries out;
  out.start_exponent = 0;
  out.coefficients.push_back(1);

  long long unit = 1;       // unit part of the current coefficient, mod q
  long long valuation = 0;  // p-valuation of the current coefficient

  for (long long n = 0; n <= pp.q; ++n) {
    const long long num = (a + n) * (b + n);
    const long long den = (1 + n) * (c + n);
    // The numerator check comes first: simultaneous vanishing still stops
    // the series before this term.
    if (reduce(num, pp.N, pp) == 0) {
      out.terminated = true;
      return out;
    }
    if (reduce(den, pp.N, pp) == 0) {
      out.terminated = false;
      out.reason = "denominator factor vanished at term " +
                   std::to_string(n + 1) + " before the numerator";
      return out;
    }
    const Split fn = split_valuation(num, pp);
    const Split fd = split_valuation(den, pp);
    valuation += fn.valuation - fd.valuation;
    if (valuation < 0) {
      out.terminated = false;
      out.reason = "coefficient at term " + std::to_string(n + 1) +
                   " is not p-integral";
      return out;
    }
    unit = (unit * fn.unit) % pp.q;
    unit = (unit * mod_inverse(fd.unit, pp.q)) % pp.q;
    long long value = 0;
    if (valuation < pp.N) {
      value = unit;
      for (long long i = 0; i < valuation; ++i) value = (value * pp.p) % pp.q;
    }
    out.coefficients.push_back(value);
  }
  // The factor a + n hits a multiple of q within q steps, so this is
  // unreachable for parameters in [1, q].
  throw Error("truncated_2F1: no termination within q terms");
}

bool has_full_root_functions(const HGOperator& op) {
  for (int m = op.pp.N; m >= 1; --m) {
    const PrimeLevel level(op.pp.p, m);
    // The two generators develop at exponents 0 and 1-c; they must differ.
    if (reduce_prime(op.c, m, op.pp) == 1) return false;
    const TruncatedSeries first = truncated_2F1(op.a, op.b, op.c, level);
    if (!first.terminated) return false;
    const TruncatedSeries second = truncated_2F1(op.a - op.c + 1,
                                                 op.b - op.c + 1,
                                                 2 - op.c, level);
    if (!second.terminated) return false;
  }
  return true;
}

std::array<RadiusClass, 3> hg_radii(const HGOperator& op) {
  const long long diffs[3] = {1 - op.c, op.c - op.a - op.b, op.b - op.a};
  const char* where[3] = {"0", "1", "infinity"};
  std::array<RadiusClass, 3> out;
  for (int i = 0; i < 3; ++i) {
    if (reduce(diffs[i], 1, op.pp) == 0) {
      throw NotInvertible(std::string("exponent difference at ") + where[i] +
                          " is divisible by p");
    }
    out[i] = radius_class(diffs[i], op.pp);
  }
  return out;
}

}  // namespace dormant
