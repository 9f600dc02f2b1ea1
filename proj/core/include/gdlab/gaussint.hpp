#pragma once

// Gaussian integers: exact arithmetic, primality, nearest-point reduction,
// sup-norm distance and prime sieving over annular sectors.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gdlab/detail/parallel.hpp"
#include "gdlab/errors.hpp"
#include "gdlab/hp.hpp"
#include "gdlab/prime_table.hpp"
#include "gdlab/regions.hpp"

namespace gdlab {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("GaussianInt overflow");
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("GaussianInt overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("GaussianInt overflow");
  return r;
}
inline mpz_class checked_add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class checked_sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class checked_mul(const mpz_class& a, const mpz_class& b) { return a * b; }

}  // namespace detail

/// A point a + bi of Z[i]. `I` is std::int64_t (overflow-checked) or mpz_class.
template <class I>
struct BasicGaussian {
  I re{0};
  I im{0};

  BasicGaussian() = default;
  BasicGaussian(I r, I i) : re(std::move(r)), im(std::move(i)) {}
  // NOLINTNEXTLINE(google-explicit-constructor): rational integers embed in Z[i].
  BasicGaussian(I r) : re(std::move(r)), im(0) {}

  static BasicGaussian unit(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {I(1), I(0)};
      case 1: return {I(0), I(1)};
      case 2: return {I(-1), I(0)};
      default: return {I(0), I(-1)};
    }
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }
  BasicGaussian conj() const { return {re, -im}; }
  I norm() const { return detail::checked_add(detail::checked_mul(re, re), detail::checked_mul(im, im)); }

  BasicGaussian& operator+=(const BasicGaussian& o) {
    re = detail::checked_add(re, o.re);
    im = detail::checked_add(im, o.im);
    return *this;
  }
  BasicGaussian& operator-=(const BasicGaussian& o) {
    re = detail::checked_sub(re, o.re);
    im = detail::checked_sub(im, o.im);
    return *this;
  }
  BasicGaussian& operator*=(const BasicGaussian& o) {
    I r = detail::checked_sub(detail::checked_mul(re, o.re), detail::checked_mul(im, o.im));
    I i = detail::checked_add(detail::checked_mul(re, o.im), detail::checked_mul(im, o.re));
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  BasicGaussian operator-() const { return {I(-re), I(-im)}; }

  friend BasicGaussian operator+(BasicGaussian a, const BasicGaussian& b) { return a += b; }
  friend BasicGaussian operator-(BasicGaussian a, const BasicGaussian& b) { return a -= b; }
  friend BasicGaussian operator*(BasicGaussian a, const BasicGaussian& b) { return a *= b; }
  friend bool operator==(const BasicGaussian& a, const BasicGaussian& b) { return a.re == b.re && a.im == b.im; }

  /// Lexicographic on (re, im); a container order, not a field order.
  friend bool operator<(const BasicGaussian& a, const BasicGaussian& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicGaussian& z) {
    return os << '(' << z.re << (z.im < 0 ? "" : "+") << z.im << "i)";
  }
};

using GaussianInt = BasicGaussian<std::int64_t>;
using BigGaussian = BasicGaussian<mpz_class>;

inline std::int64_t norm(const GaussianInt& z) { return z.norm(); }
inline mpz_class norm(const BigGaussian& z) { return z.norm(); }

BigGaussian to_big(const GaussianInt& z);
/// Throws std::overflow_error when a coordinate leaves int64.
GaussianInt narrow(const BigGaussian& z);

inline std::complex<double> to_complex(const GaussianInt& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}
ComplexHP to_hp(const GaussianInt& z, long precision_bits = kDefaultPrecisionBits);
ComplexHP to_hp(const BigGaussian& z, long precision_bits = kDefaultPrecisionBits);

/// Argument in (-pi, pi]; zero maps to 0.
inline double arg(const GaussianInt& z) {
  return std::atan2(static_cast<double>(z.im), static_cast<double>(z.re));
}

/// True iff d divides n in Z[i] (n * conj(d) divisible by norm(d)). d != 0.
bool divides(const GaussianInt& d, const GaussianInt& n);
/// n / d, requires divides(d, n).
GaussianInt exact_quotient(const GaussianInt& n, const GaussianInt& d);

/// Deterministic trial division.
bool is_rational_prime(std::uint64_t n);

/// True iff z is a unit multiple of a Gaussian prime.
bool is_gaussian_prime(const GaussianInt& z);

/// Number of Gaussian prime factors of z with multiplicity (units ignored),
/// read off the rational factorization of norm(z). z != 0.
int gaussian_omega(const GaussianInt& z);

/// The Gaussian integer nearest to z coordinatewise. Throws TieError when a
/// coordinate lies exactly on Z + 1/2, std::overflow_error outside int64.
GaussianInt nearest_gaussian(const ComplexHP& z);

/// max(||Re z||, ||Im z||) with ||x|| the distance to the nearest integer.
double sup_dist(const ComplexHP& z);

/// Every g in Z[i] with |g - center| <= radius, ordered by (re, im).
std::vector<GaussianInt> enumerate_disk(const ComplexHP& center, double radius);

/// #{n in Z[i] : x_lo < |n| <= x_hi}. Zero when x_lo >= x_hi.
std::uint64_t annulus_lattice_count(double x_lo, double x_hi);

/// Fast repeated evaluation of n * w modulo Z[i] for Gaussian n.
///
/// w is split once, in its own precision, into a Gaussian integer part and a
/// fractional part held in double. n * frac(w) then carries absolute error
/// about |n| 2^-51; when that exceeds kReductionBudget the product is redone
/// in extended precision, and PrecisionError is raised if even that cannot
/// meet the budget.
class LatticeFrac {
 public:
  static constexpr double kReductionBudget = 1e-6;

  explicit LatticeFrac(const ComplexHP& w);

  /// n*w - g for a nearest Gaussian g; each coordinate in [-1/2, 1/2].
  std::complex<double> reduce(const GaussianInt& n) const;
  double sup_dist(const GaussianInt& n) const;

  /// The nearest Gaussian integer f(n*w) and the residual n*w - f(n*w).
  /// Throws TieError when a coordinate is within the error bound of 1/2.
  std::pair<GaussianInt, std::complex<double>> nearest(const GaussianInt& n) const;

  /// Absolute error bound of reduce(n) on the fast path.
  double error_bound(const GaussianInt& n) const;

  const ComplexHP& value() const { return w_; }

 private:
  bool fast_path(const GaussianInt& n) const;
  ComplexHP product(const GaussianInt& n) const;

  ComplexHP w_;
  GaussianInt whole_;
  std::complex<double> frac_;
};

/// Memory guard for the sector sieve.
struct SieveLimits {
  double max_radius = 4096.0;
};

/// Gaussian primes in `reg`, ordered by (norm, arg). Throws
/// ResourceLimitError when reg.r_max() exceeds limits.max_radius.
std::vector<GaussianInt> sieve_region(const Region& reg, const SieveLimits& limits = {});

/// |sieve_region(reg)| without materializing the list.
std::uint64_t count_region_primes(const Region& reg, const SieveLimits& limits = {});

namespace detail {

void check_sieve_limits(const Region& reg, const SieveLimits& limits);

inline bool lattice_point_is_prime(std::int64_t a, std::int64_t b, const PrimeTable& table) {
  const std::uint64_t ua = static_cast<std::uint64_t>(a < 0 ? -a : a);
  const std::uint64_t ub = static_cast<std::uint64_t>(b < 0 ? -b : b);
  if (ua == 0) return (ub & 3U) == 3U && table.is_prime(ub);
  if (ub == 0) return (ua & 3U) == 3U && table.is_prime(ua);
  return table.is_prime(ua * ua + ub * ub);
}

/// Calls fn(p) for every Gaussian prime p of `reg` with Re(p) in [a_lo, a_hi].
template <class Fn>
void scan_region_primes(const Region& reg, const PrimeTable& table, std::int64_t a_lo, std::int64_t a_hi, Fn&& fn) {
  const double hi2 = reg.r_max() * reg.r_max();
  const bool full = reg.full_circle();
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    const double rest = hi2 - static_cast<double>(a) * static_cast<double>(a);
    if (rest < 0) continue;
    std::int64_t bmax = static_cast<std::int64_t>(std::sqrt(rest));
    while (static_cast<double>(a * a + (bmax + 1) * (bmax + 1)) <= hi2) ++bmax;
    while (bmax >= 0 && static_cast<double>(a * a + bmax * bmax) > hi2) --bmax;
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      const double n = static_cast<double>(a * a + b * b);
      if (!reg.contains_norm(n)) continue;
      if (!lattice_point_is_prime(a, b, table)) continue;
      if (!full && !reg.contains_arg(std::atan2(static_cast<double>(b), static_cast<double>(a)))) continue;
      fn(GaussianInt{a, b});
    }
  }
}

}  // namespace detail

/// Number of Gaussian primes p in `reg` with pred(p). pred must be callable
/// concurrently.
template <class Pred>
std::uint64_t count_region_primes_if(const Region& reg, const SieveLimits& limits, Pred pred) {
  detail::check_sieve_limits(reg, limits);
  const auto r = static_cast<std::int64_t>(std::floor(reg.r_max()));
  const PrimeTable table(static_cast<std::uint64_t>(std::floor(reg.r_max() * reg.r_max())));
  return detail::chunked_reduce<std::uint64_t>(-r, r, 0, [&](std::int64_t lo, std::int64_t hi) {
    std::uint64_t count = 0;
    detail::scan_region_primes(reg, table, lo, hi, [&](const GaussianInt& p) {
      if (pred(p)) ++count;
    });
    return count;
  });
}

}  // namespace gdlab
