#include "dormant/arith.hpp"

#include <string>

namespace dormant {

namespace {

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeLevel::PrimeLevel(long long p_, int N_) : p(p_), N(N_) {
  if (!is_odd_prime(p)) {
    throw ParameterError("p must be an odd prime, got " + std::to_string(p));
  }
  if (N < 1) {
    throw ParameterError("level N must be positive, got " + std::to_string(N));
  }
  q = 1;
  for (int i = 0; i < N; ++i) {
    if (q > (1LL << 62) / p) {
      throw ParameterError("p^N overflows the working integer type");
    }
    q *= p;
  }
}

long long PrimeLevel::pow_p(int k) const {
  if (k < 0 || k > N) {
    throw ParameterError("power index out of range");
  }
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

long long reduce(long long a, int n_prime, const PrimeLevel& pp) {
  if (n_prime < 1 || n_prime > pp.N) {
    throw ParameterError("reduction level out of range");
  }
  const long long m = pp.pow_p(n_prime);
  long long r = a % m;
  if (r < 0) r += m;
  return r;
}

long long reduce_prime(long long a, int n_prime, const PrimeLevel& pp) {
  const long long r = reduce(a, n_prime, pp);
  return r == 0 ? pp.pow_p(n_prime) : r;
}

ResidueClass residue_class(long long a, const PrimeLevel& pp) {
  const long long r = reduce(a, pp.N, pp);
  return ResidueClass{std::min(r, pp.q - r)};
}

RadiusClass radius_class(long long two_rho, const PrimeLevel& pp) {
  const long long r = reduce(two_rho, pp.N, pp);
  if (r % pp.p == 0) {
    throw NotInvertible("value " + std::to_string(two_rho) +
                        " is not invertible mod " + std::to_string(pp.q));
  }
  return RadiusClass{std::min(r, pp.q - r)};
}

RadiusClass radius_of_svalue(long long s, const PrimeLevel& pp) {
  return radius_class(2 * s + 1, pp);
}

long long svalue_of_radius(RadiusClass rho, const PrimeLevel& pp) {
  if (rho.lambda < 1 || rho.lambda > (pp.q - 1) / 2 || rho.lambda % pp.p == 0) {
    throw DomainError("not a radius representative: " +
                      std::to_string(rho.lambda));
  }
  // 2s+1 is lambda when lambda is odd, q - lambda otherwise.
  return rho.lambda % 2 == 1 ? (rho.lambda - 1) / 2
                             : (pp.q - rho.lambda - 1) / 2;
}

RadiusClass epsilon(const PrimeLevel&) { return RadiusClass{1}; }

RadiusClass involute(RadiusClass rho) { return rho; }

std::vector<RadiusClass> enumerate_radii(const PrimeLevel& pp) {
  std::vector<RadiusClass> out;
  out.reserve(static_cast<size_t>((pp.q - 1) / 2));
  for (long long lambda = 1; lambda <= (pp.q - 1) / 2; ++lambda) {
    if (lambda % pp.p != 0) out.push_back(RadiusClass{lambda});
  }
  return out;
}

}  // namespace dormant
