#pragma once

#include <cstdint>

#include "hookline/error.hpp"

namespace hookline {

using Count = std::int64_t;

namespace checked {

inline Count add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Count sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Count mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace checked

__extension__ using Wide = __int128;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // r * (n - k + i) is always divisible by i; the 128-bit intermediate keeps
  // the product exact whenever the quotient fits.
  Wide r = 1;
  for (Count i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > INT64_MAX) throw OverflowError("binomial coefficient exceeds int64");
  }
  return static_cast<Count>(r);
}

/// Catalan number C_m = binom(2m, m) / (m + 1); zero for m < 0.
inline Count catalan(Count m) {
  if (m < 0) return 0;
  // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step.
  Wide c = 1;
  for (Count i = 0; i < m; ++i) {
    c = c * (2 * (2 * i + 1)) / (i + 2);
    if (c > INT64_MAX) throw OverflowError("Catalan number exceeds int64");
  }
  return static_cast<Count>(c);
}

}  // namespace hookline
