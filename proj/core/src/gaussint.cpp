#include "gdlab/gaussint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gdlab {

namespace {

std::uint64_t uabs(std::int64_t x) {
  return x < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

// Rounds half up; used where the tie side does not matter.
Real round_half_up(const Real& x) {
  Real half(0.5, x.precision());
  return (x + half).floor();
}

// ||x|| for an extended-precision real.
Real dist_to_integer(const Real& x) {
  Real f = x - x.floor();
  Real g = Real(std::int64_t{1}, x.precision()) - f;
  return f < g ? f : g;
}

GaussianInt round_hp(const ComplexHP& z) {
  return {round_half_up(z.re).to_int64(), round_half_up(z.im).to_int64()};
}

}  // namespace

BigGaussian to_big(const GaussianInt& z) {
  return {mpz_class(static_cast<long>(z.re)), mpz_class(static_cast<long>(z.im))};
}

GaussianInt narrow(const BigGaussian& z) {
  if (!z.re.fits_slong_p() || !z.im.fits_slong_p()) throw std::overflow_error("BigGaussian does not fit int64");
  return {static_cast<std::int64_t>(z.re.get_si()), static_cast<std::int64_t>(z.im.get_si())};
}

ComplexHP to_hp(const GaussianInt& z, long precision_bits) {
  return {Real(z.re, precision_bits), Real(z.im, precision_bits)};
}

ComplexHP to_hp(const BigGaussian& z, long precision_bits) {
  ComplexHP out(precision_bits);
  mpfr_set_z(out.re.raw(), z.re.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(out.im.raw(), z.im.get_mpz_t(), MPFR_RNDN);
  return out;
}

bool divides(const GaussianInt& d, const GaussianInt& n) {
  if (d.is_zero()) throw std::invalid_argument("divides: divisor is zero");
  const GaussianInt t = n * d.conj();
  const std::int64_t m = d.norm();
  return t.re % m == 0 && t.im % m == 0;
}

GaussianInt exact_quotient(const GaussianInt& n, const GaussianInt& d) {
  if (!divides(d, n)) throw std::invalid_argument("exact_quotient: divisor does not divide");
  const GaussianInt t = n * d.conj();
  const std::int64_t m = d.norm();
  return {t.re / m, t.im / m};
}

bool is_rational_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t i = 5; i <= n / i; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

bool is_gaussian_prime(const GaussianInt& z) {
  const std::uint64_t a = uabs(z.re);
  const std::uint64_t b = uabs(z.im);
  if (a == 0) return b % 4 == 3 && is_rational_prime(b);
  if (b == 0) return a % 4 == 3 && is_rational_prime(a);
  const unsigned __int128 n = static_cast<unsigned __int128>(a) * a + static_cast<unsigned __int128>(b) * b;
  if (n > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("norm exceeds 2^64");
  return is_rational_prime(static_cast<std::uint64_t>(n));
}

int gaussian_omega(const GaussianInt& z) {
  if (z.is_zero()) throw std::invalid_argument("gaussian_omega: zero has no factorization");
  const unsigned __int128 n128 =
      static_cast<unsigned __int128>(uabs(z.re)) * uabs(z.re) + static_cast<unsigned __int128>(uabs(z.im)) * uabs(z.im);
  if (n128 > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("norm exceeds 2^64");
  std::uint64_t n = static_cast<std::uint64_t>(n128);
  int omega = 0;
  auto strip = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    // p = 2 and p = 1 (mod 4) contribute one prime per factor of the norm;
    // p = 3 (mod 4) is itself prime in Z[i] and appears squared in the norm.
    omega += (p % 4 == 3) ? e / 2 : e;
  };
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) strip(p);
  }
  if (n > 1) strip(n);
  return omega;
}

GaussianInt nearest_gaussian(const ComplexHP& z) {
  auto coord = [](const Real& x, const char* which) {
    const Real fl = x.floor();
    const Real frac = x - fl;
    const Real half(0.5, x.precision());
    if (frac == half) throw TieError(std::string("nearest_gaussian: ") + which + " part lies on Z + 1/2");
    return (frac > half ? fl + Real(std::int64_t{1}, x.precision()) : fl).to_int64();
  };
  return {coord(z.re, "real"), coord(z.im, "imaginary")};
}

double sup_dist(const ComplexHP& z) {
  return std::max(dist_to_integer(z.re).to_double(), dist_to_integer(z.im).to_double());
}

std::vector<GaussianInt> enumerate_disk(const ComplexHP& center, double radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("enumerate_disk: radius must be >= 0");
  const GaussianInt whole = round_hp(center);
  const std::complex<double> frac = (center - to_hp(whole, center.precision())).to_complex();
  const auto reach = static_cast<std::int64_t>(std::ceil(radius)) + 1;
  const double r2 = radius * radius;
  std::vector<GaussianInt> out;
  for (std::int64_t x = -reach; x <= reach; ++x) {
    for (std::int64_t y = -reach; y <= reach; ++y) {
      const double dx = static_cast<double>(x) - frac.real();
      const double dy = static_cast<double>(y) - frac.imag();
      if (dx * dx + dy * dy <= r2) out.push_back(whole + GaussianInt{x, y});
    }
  }
  return out;
}

std::uint64_t annulus_lattice_count(double x_lo, double x_hi) {
  if (!(x_lo >= 0.0)) throw std::invalid_argument("annulus_lattice_count: x_lo must be >= 0");
  if (!(x_lo < x_hi)) return 0;
  const double lo2 = x_lo * x_lo;
  const double hi2 = x_hi * x_hi;
  // #{b : a^2 + b^2 <= t}
  auto column = [](std::int64_t a, double t) -> std::uint64_t {
    const double rest = t - static_cast<double>(a * a);
    if (rest < 0) return 0;
    auto b = static_cast<std::int64_t>(std::sqrt(rest));
    while (static_cast<double>(a * a + (b + 1) * (b + 1)) <= t) ++b;
    while (b >= 0 && static_cast<double>(a * a + b * b) > t) --b;
    return b < 0 ? 0 : static_cast<std::uint64_t>(2 * b + 1);
  };
  const auto reach = static_cast<std::int64_t>(std::floor(x_hi));
  std::uint64_t total = 0;
  for (std::int64_t a = -reach; a <= reach; ++a) total += column(a, hi2) - column(a, lo2);
  return total;
}

LatticeFrac::LatticeFrac(const ComplexHP& w) : w_(w), whole_(round_hp(w)) {
  frac_ = (w_ - to_hp(whole_, w_.precision())).to_complex();
}

double LatticeFrac::error_bound(const GaussianInt& n) const {
  const double l1 = static_cast<double>(uabs(n.re)) + static_cast<double>(uabs(n.im));
  return (l1 + 1.0) * std::ldexp(1.0, -51);
}

bool LatticeFrac::fast_path(const GaussianInt& n) const { return error_bound(n) < kReductionBudget; }

ComplexHP LatticeFrac::product(const GaussianInt& n) const {
  const long prec = w_.precision();
  const double l1 = static_cast<double>(uabs(n.re)) + static_cast<double>(uabs(n.im));
  const double mag = std::abs(w_.to_complex()) + 1.0;
  if (l1 * mag * std::ldexp(1.0, static_cast<int>(-prec + 2)) >= kReductionBudget) {
    throw PrecisionError("n*w reduction needs more than " + std::to_string(prec) + " bits for |n| ~ " +
                         std::to_string(l1));
  }
  return to_hp(n, prec) * w_;
}

std::complex<double> LatticeFrac::reduce(const GaussianInt& n) const {
  if (fast_path(n)) {
    const double a = static_cast<double>(n.re);
    const double b = static_cast<double>(n.im);
    const double x = a * frac_.real() - b * frac_.imag();
    const double y = a * frac_.imag() + b * frac_.real();
    return {x - std::nearbyint(x), y - std::nearbyint(y)};
  }
  const ComplexHP p = product(n);
  return (p - to_hp(round_hp(p), p.precision())).to_complex();
}

double LatticeFrac::sup_dist(const GaussianInt& n) const {
  const std::complex<double> r = reduce(n);
  return std::min(0.5, std::max(std::abs(r.real()), std::abs(r.imag())));
}

std::pair<GaussianInt, std::complex<double>> LatticeFrac::nearest(const GaussianInt& n) const {
  if (fast_path(n)) {
    const double a = static_cast<double>(n.re);
    const double b = static_cast<double>(n.im);
    const double x = a * frac_.real() - b * frac_.imag();
    const double y = a * frac_.imag() + b * frac_.real();
    const double gx = std::nearbyint(x);
    const double gy = std::nearbyint(y);
    const std::complex<double> resid{x - gx, y - gy};
    const double tol = error_bound(n);
    if (std::abs(std::abs(resid.real()) - 0.5) <= tol || std::abs(std::abs(resid.imag()) - 0.5) <= tol) {
      throw TieError("f(n w) undefined: a coordinate of n w lies on Z + 1/2");
    }
    const GaussianInt g{static_cast<std::int64_t>(gx), static_cast<std::int64_t>(gy)};
    return {n * whole_ + g, resid};
  }
  const ComplexHP p = product(n);
  const GaussianInt f = nearest_gaussian(p);
  return {f, (p - to_hp(f, p.precision())).to_complex()};
}

namespace detail {

void check_sieve_limits(const Region& reg, const SieveLimits& limits) {
  if (reg.r_max() > limits.max_radius) {
    throw ResourceLimitError("sieve radius " + std::to_string(reg.r_max()) + " exceeds cap " +
                             std::to_string(limits.max_radius));
  }
}

}  // namespace detail

std::vector<GaussianInt> sieve_region(const Region& reg, const SieveLimits& limits) {
  detail::check_sieve_limits(reg, limits);
  const auto r = static_cast<std::int64_t>(std::floor(reg.r_max()));
  const PrimeTable table(static_cast<std::uint64_t>(std::floor(reg.r_max() * reg.r_max())));
  std::vector<GaussianInt> out;
  detail::scan_region_primes(reg, table, -r, r, [&](const GaussianInt& p) { out.push_back(p); });
  std::sort(out.begin(), out.end(), [](const GaussianInt& x, const GaussianInt& y) {
    const auto nx = x.norm();
    const auto ny = y.norm();
    if (nx != ny) return nx < ny;
    return arg(x) < arg(y);
  });
  return out;
}

std::uint64_t count_region_primes(const Region& reg, const SieveLimits& limits) {
  return count_region_primes_if(reg, limits, [](const GaussianInt&) { return true; });
}

}  // namespace gdlab
