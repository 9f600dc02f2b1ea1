#include "gdlab/vaaler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gdlab {

namespace {

constexpr double kImagTolerance = 1e-12;

// e(j x) with the phase reduced mod 1 first.
std::complex<double> e_int(int j, double x) {
  const double t = static_cast<double>(j) * (x - std::floor(x));
  return std::polar(1.0, 2.0 * std::numbers::pi * (t - std::floor(t)));
}

double checked_real(std::complex<double> s, const char* what) {
  if (std::abs(s.imag()) >= kImagTolerance) {
    throw std::logic_error(std::string(what) + ": imaginary part " + std::to_string(s.imag()) + " did not cancel");
  }
  return s.real();
}

}  // namespace

double psi(double x) { return x - std::floor(x) - 0.5; }

double w_weight(double t) {
  const double a = std::abs(t);
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("w_weight needs 0 < |t| < 1");
  const double pt = std::numbers::pi * a;
  return pt * (1.0 - a) * std::cos(pt) / std::sin(pt) + a;
}

VaalerPoly::VaalerPoly(int degree) : J(degree) {
  if (degree < 1) throw std::invalid_argument("Vaaler degree J must be >= 1");
  psi_coeff.assign(static_cast<std::size_t>(J) + 1, {0.0, 0.0});
  sigma_coeff.assign(static_cast<std::size_t>(J) + 1, 0.0);
  const double jp1 = static_cast<double>(J) + 1.0;
  for (int j = 1; j <= J; ++j) {
    // -(2 pi i j)^{-1} W = i W / (2 pi j)
    psi_coeff[static_cast<std::size_t>(j)] = {0.0, w_weight(j / jp1) / (2.0 * std::numbers::pi * j)};
  }
  for (int j = 0; j <= J; ++j) sigma_coeff[static_cast<std::size_t>(j)] = (1.0 - j / jp1) / (2.0 * jp1);
}

double VaalerPoly::psi_star(double x) const {
  std::complex<double> s{0.0, 0.0};
  for (int j = 1; j <= J; ++j) {
    const std::complex<double> a = psi_coeff[static_cast<std::size_t>(j)];
    s += a * e_int(j, x);
    s += std::conj(a) * e_int(-j, x);
  }
  return checked_real(s, "psi_star");
}

double VaalerPoly::sigma(double x) const {
  std::complex<double> s{sigma_coeff[0], 0.0};
  for (int j = 1; j <= J; ++j) {
    const double a = sigma_coeff[static_cast<std::size_t>(j)];
    s += a * e_int(j, x);
    s += a * e_int(-j, x);
  }
  return checked_real(s, "sigma");
}

double psi_star(double x, int J) { return VaalerPoly(J).psi_star(x); }
double sigma(double x, int J) { return VaalerPoly(J).sigma(x); }

}  // namespace gdlab
