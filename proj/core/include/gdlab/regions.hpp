#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace gdlab {

/// Annular sector D(r_min, r_max, theta_min, theta_max): points R e^{i theta}
/// with r_min < R <= r_max and theta_min < theta <= theta_max (mod 2 pi).
///
/// Arguments of lattice points are normalized to (-pi, pi] and then shifted by
/// whole turns into (theta_min, theta_min + 2 pi] before the upper test.
class Region {
 public:
  /// Throws std::invalid_argument unless 0 <= r_min < r_max and
  /// theta_min < theta_max <= theta_min + 2 pi.
  Region(double r_min, double r_max, double theta_min, double theta_max);

  static Region disk(double r_max) { return {0.0, r_max, -std::numbers::pi, std::numbers::pi}; }
  static Region annulus(double r_min, double r_max) {
    return {r_min, r_max, -std::numbers::pi, std::numbers::pi};
  }

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  double theta_min() const { return theta_min_; }
  double theta_max() const { return theta_max_; }
  bool full_circle() const;

  /// Angular test only, for an argument already in (-pi, pi].
  bool contains_arg(double arg) const;
  /// Radial test on the squared modulus.
  bool contains_norm(double norm) const { return norm > r_min_ * r_min_ && norm <= r_max_ * r_max_; }
  bool contains(double x, double y) const;

  /// Splits (theta_min, theta_max] into `parts` equal consecutive arcs.
  std::vector<Region> split_angular(int parts) const;

 private:
  double r_min_;
  double r_max_;
  double theta_min_;
  double theta_max_;
};

/// Lebesgue area (theta_max - theta_min)(r_max^2 - r_min^2)/2.
double area_measure(const Region& reg);
/// The dR dtheta coordinate measure (theta_max - theta_min)(r_max - r_min).
double rtheta_measure(const Region& reg);

struct DiskPair {
  std::complex<double> c1;
  double r1;
  std::complex<double> c2;
  double r2;
};

/// Area of the intersection of two closed disks.
double lens_area(const DiskPair& dp);

/// The constant pi/3 - sqrt(3)/2 in the lens lower bound.
inline constexpr double kNuConstant = std::numbers::pi / 3.0 - std::numbers::sqrt3 / 2.0;

/// Checks lens_area(disks of radii eta_p and eta_p/abs_c, centres dist apart)
/// >= (pi/3 - sqrt 3/2) eta_p^2. Requires eta_p > 0, 0 < abs_c <= 1 and
/// 0 <= dist <= eta_p; throws std::invalid_argument otherwise.
bool nu_lower_bound(double eta_p, double abs_c, double dist);

}  // namespace gdlab
