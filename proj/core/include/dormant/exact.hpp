#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dormant {

using Bigint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Bigint ipow(const Bigint& base, unsigned exp) {
  Bigint r = 1;
  Bigint b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

}  // namespace dormant
