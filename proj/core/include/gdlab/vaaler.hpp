#pragma once

// Sawtooth psi, Vaaler's trigonometric polynomial psi* of degree J and its
// Fejer-kernel majorant sigma, so that |psi* - psi| <= sigma.

#include <complex>
#include <vector>

namespace gdlab {

struct VaalerPoly {
  int J = 0;
  std::vector<std::complex<double>> psi_coeff;  // index j = 1..J; coefficient of e(jx). e(-jx) takes the conjugate.
  std::vector<double> sigma_coeff;              // index |j| = 0..J

  /// Throws std::invalid_argument for J < 1.
  explicit VaalerPoly(int degree);

  double psi_star(double x) const;
  double sigma(double x) const;
};

/// x - floor(x) - 1/2, so psi(0) = -1/2.
double psi(double x);

/// pi t (1 - |t|) cot(pi t) + |t| for 0 < |t| < 1; std::domain_error otherwise.
double w_weight(double t);

double psi_star(double x, int J);
double sigma(double x, int J);

}  // namespace gdlab
