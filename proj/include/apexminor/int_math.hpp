#pragma once

#include <cmath>
#include <cstdint>

namespace apexminor {

/// floor(sqrt(x)) for x >= 0, corrected after the floating-point estimate.
inline std::int64_t isqrt_floor(std::int64_t x) {
  if (x <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline std::int64_t isqrt_ceil(std::int64_t x) {
  std::int64_t r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

}  // namespace apexminor
