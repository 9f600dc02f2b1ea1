#pragma once

// Linear exponential sums sum e(Im(n kappa)) over annuli and sectors of Z[i],
// the Fourier error sum F_P, and the averaged integral bound.

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>

#include "gdlab/approx.hpp"
#include "gdlab/hp.hpp"

namespace gdlab {

struct ExpSumQuery {
  ComplexHP kappa{0.0, 0.0};
  double x_lo = 0.0;
  double x_hi = 1.0;
  std::optional<std::pair<double, double>> sector;  // (theta_min, theta_max]
};

struct ExpSumLimits {
  double max_radius = 4096.0;
  double max_work = 5e8;  // lattice points summed by trig_FP
};

/// sum over x_lo < |n| <= x_hi (and arg n in the sector) of e(Im(n kappa)).
/// kappa is reduced mod Z[i] in its own precision before any double work.
std::complex<double> linear_sum(const ExpSumQuery& q, const ExpSumLimits& limits = {});

/// x * min(1/||Im kappa||, x)^(1/2) * min(1/||Re kappa||, x)^(1/2), with 1/0 = inf.
double small_bound(const ComplexHP& kappa, double x);

struct TrigDegrees {
  std::int64_t J1 = 0;  // [N^eps |d2| / mu]
  std::int64_t J2 = 0;  // [N^eps / mu]
};
TrigDegrees trig_degrees(const SieveParams& sp, double N);

/// |linear_sum| for kappa = d1 (n1/d2 + n2 c) alpha over P/(2|d1|) < |n| <= P/|d1|.
double trig_FP_term(const SieveParams& sp, const GaussianInt& n1, const GaussianInt& n2,
                    const ExpSumLimits& limits = {});

/// (mu^4 / N(d2)) * sum of trig_FP_term over (n1, n2) != (0, 0) with
/// |n1| <= 2 J1 and |n2| <= 2 J2.
double trig_FP(const SieveParams& sp, double N, const ExpSumLimits& limits = {});

struct AvIntegralOptions {
  double rel_tol = 1e-3;
  int theta_pieces = 16;
  std::int64_t max_breakpoints = 200000;
};

/// int_{-pi}^{pi} int_A^B min(1/||Im(z R e^{i theta})||, Y)^(1/2) min(1/||Re(.)||, Y)^(1/2) dR dtheta.
/// Throws QuadratureError when the error estimate misses rel_tol.
double av_integral(const ComplexHP& z, double Y, double A, double B, const AvIntegralOptions& opt = {});

}  // namespace gdlab
