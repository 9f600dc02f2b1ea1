#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "gdlab/gaussint.hpp"

namespace gdlab::detail {

/// Largest b >= -1 with a^2 + b^2 <= t, exact for integer norms below 2^53.
inline std::int64_t column_height(std::int64_t a, double t) {
  const double rest = t - static_cast<double>(a) * static_cast<double>(a);
  if (rest < 0) return -1;
  auto b = static_cast<std::int64_t>(std::sqrt(rest));
  while (static_cast<double>(a * a + (b + 1) * (b + 1)) <= t) ++b;
  while (b >= 0 && static_cast<double>(a * a + b * b) > t) --b;
  return b;
}

/// Calls fn(n) for every n with lo2 < scale * N(n) <= hi2 and Re(n) in
/// [a_lo, a_hi], in (re, im) order. The test is made on the integer
/// scale * N(n), so points on either boundary circle are classified exactly.
template <class Fn>
void scan_scaled_annulus(double lo2, double hi2, std::int64_t scale, std::int64_t a_lo, std::int64_t a_hi, Fn&& fn) {
  const double k = static_cast<double>(scale);
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    std::int64_t bmax = column_height(a, hi2 / k);
    while (bmax >= 0 && k * static_cast<double>(a * a + bmax * bmax) > hi2) --bmax;
    while (k * static_cast<double>(a * a + (bmax + 1) * (bmax + 1)) <= hi2) ++bmax;
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      if (k * static_cast<double>(a * a + b * b) > lo2) fn(GaussianInt{a, b});
    }
  }
}

/// Calls fn(n) for every n with lo < |n| <= hi and Re(n) in [a_lo, a_hi], in (re, im) order.
template <class Fn>
void scan_annulus(double lo, double hi, std::int64_t a_lo, std::int64_t a_hi, Fn&& fn) {
  scan_scaled_annulus(lo * lo, hi * hi, 1, a_lo, a_hi, std::forward<Fn>(fn));
}

/// Sums per_point(m) over lo2 < scale * N(m) <= hi2 in a fixed chunk order.
template <class T, class Fn>
T reduce_scaled_annulus(double lo2, double hi2, std::int64_t scale, Fn&& per_point) {
  const auto r = static_cast<std::int64_t>(std::floor(std::sqrt(hi2 / static_cast<double>(scale)))) + 1;
  return chunked_reduce<T>(-r, r, T{}, [&](std::int64_t a_lo, std::int64_t a_hi) {
    T acc{};
    scan_scaled_annulus(lo2, hi2, scale, a_lo, a_hi, [&](const GaussianInt& n) { acc += per_point(n); });
    return acc;
  });
}

/// Sums per_point(n) over lo < |n| <= hi in a fixed chunk order.
template <class T, class Fn>
T reduce_annulus(double lo, double hi, Fn&& per_point) {
  return reduce_scaled_annulus<T>(lo * lo, hi * hi, 1, std::forward<Fn>(per_point));
}

}  // namespace gdlab::detail
