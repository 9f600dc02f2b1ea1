#include "gdlab/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Region::Region(double r_min, double r_max, double theta_min, double theta_max)
    : r_min_(r_min), r_max_(r_max), theta_min_(theta_min), theta_max_(theta_max) {
  if (!(r_min >= 0.0) || !(r_min < r_max) || !std::isfinite(r_max)) {
    throw std::invalid_argument("region needs 0 <= r_min < r_max < inf");
  }
  if (!(theta_min < theta_max) || !(theta_max <= theta_min + kTwoPi)) {
    throw std::invalid_argument("region needs theta_min < theta_max <= theta_min + 2 pi");
  }
}

bool Region::full_circle() const { return theta_max_ - theta_min_ >= kTwoPi; }

bool Region::contains_arg(double arg) const {
  double t = arg;
  while (t <= theta_min_) t += kTwoPi;
  while (t > theta_min_ + kTwoPi) t -= kTwoPi;
  return t <= theta_max_;
}

bool Region::contains(double x, double y) const {
  const double n = x * x + y * y;
  return contains_norm(n) && contains_arg(std::atan2(y, x));
}

std::vector<Region> Region::split_angular(int parts) const {
  if (parts < 1) throw std::invalid_argument("split_angular needs parts >= 1");
  std::vector<Region> out;
  out.reserve(static_cast<std::size_t>(parts));
  const double width = (theta_max_ - theta_min_) / parts;
  double lo = theta_min_;
  for (int k = 1; k <= parts; ++k) {
    const double hi = (k == parts) ? theta_max_ : theta_min_ + k * width;
    out.emplace_back(r_min_, r_max_, lo, hi);
    lo = hi;
  }
  return out;
}

double area_measure(const Region& reg) {
  return (reg.theta_max() - reg.theta_min()) *
         (reg.r_max() * reg.r_max() - reg.r_min() * reg.r_min()) / 2.0;
}

double rtheta_measure(const Region& reg) {
  return (reg.theta_max() - reg.theta_min()) * (reg.r_max() - reg.r_min());
}

double lens_area(const DiskPair& dp) {
  if (!(dp.r1 > 0.0) || !(dp.r2 > 0.0)) throw std::invalid_argument("disk radii must be positive");
  const double d = std::abs(dp.c1 - dp.c2);
  const double r1 = dp.r1;
  const double r2 = dp.r2;
  if (d >= r1 + r2) return 0.0;
  if (d <= std::abs(r1 - r2)) {
    const double r = std::min(r1, r2);
    return std::numbers::pi * r * r;
  }
  // Circular-segment formula; clamp the cosines against rounding at tangency.
  const double c1 = std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0);
  const double c2 = std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0);
  const double k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
  return r1 * r1 * std::acos(c1) + r2 * r2 * std::acos(c2) - 0.5 * std::sqrt(std::max(k, 0.0));
}

bool nu_lower_bound(double eta_p, double abs_c, double dist) {
  if (!(eta_p > 0.0)) throw std::invalid_argument("nu_lower_bound: eta_p must be positive");
  if (!(abs_c > 0.0 && abs_c <= 1.0)) throw std::invalid_argument("nu_lower_bound: need 0 < |c| <= 1");
  if (!(dist >= 0.0 && dist <= eta_p)) {
    throw std::invalid_argument("nu_lower_bound: need 0 <= dist <= eta_p, got dist=" + std::to_string(dist));
  }
  const double lens = lens_area({{0.0, 0.0}, eta_p, {dist, 0.0}, eta_p / abs_c});
  return lens >= kNuConstant * eta_p * eta_p;
}

}  // namespace gdlab
