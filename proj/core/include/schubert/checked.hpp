#pragma once

#include <stdexcept>

namespace schubert {

// Exact integer arithmetic: silent wraparound is never acceptable for
// structure constants, so every combining operation is checked.

inline long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient addition overflow");
  }
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient multiplication overflow");
  }
  return r;
}

inline long long checked_pow2(int e) {
  if (e < 0) throw std::domain_error("negative power of two requested");
  if (e > 62) throw std::overflow_error("power of two overflow");
  return 1LL << e;
}

}  // namespace schubert
