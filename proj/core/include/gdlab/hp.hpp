#pragma once

// Extended-precision real and complex numbers on top of GNU MPFR.
//
// Every Real owns its precision. Binary operations produce a result at the
// larger of the two operand precisions, rounded to nearest.

#include <mpfr.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdlab {

inline constexpr long kDefaultPrecisionBits = 128;
inline constexpr long kMinPrecisionBits = 64;

class Real {
 public:
  explicit Real(long precision_bits = kDefaultPrecisionBits);
  Real(double value, long precision_bits);
  Real(std::int64_t value, long precision_bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal literal ("1.25", "-3e-4"). Throws std::invalid_argument.
  static Real parse(std::string_view text, long precision_bits);
  static Real pi(long precision_bits);
  static Real e(long precision_bits);
  static Real sqrt_of(std::int64_t n, long precision_bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Rounds to a new precision (may lose or pad bits).
  Real with_precision(long precision_bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with value = m * 2^e, 0.5 <= |m| < 1. Zero gives LONG_MIN.
  long exponent() const;

  Real floor() const;
  Real abs() const;
  Real sqrt() const;
  /// Exact integer conversion; throws std::overflow_error outside int64.
  std::int64_t to_int64() const;
  std::string to_string(int digits = 20) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

Real operator*(const Real& a, std::int64_t k);
Real operator*(std::int64_t k, const Real& a);

/// Complex number with extended-precision parts.
struct ComplexHP {
  Real re;
  Real im;

  explicit ComplexHP(long precision_bits = kDefaultPrecisionBits)
      : re(precision_bits), im(precision_bits) {}
  ComplexHP(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  ComplexHP(double r, double i, long precision_bits = kDefaultPrecisionBits)
      : re(r, precision_bits), im(i, precision_bits) {}

  static ComplexHP from(std::complex<double> z, long precision_bits = kDefaultPrecisionBits) {
    return {z.real(), z.imag(), precision_bits};
  }

  long precision() const { return re.precision() > im.precision() ? re.precision() : im.precision(); }
  ComplexHP with_precision(long bits) const { return {re.with_precision(bits), im.with_precision(bits)}; }

  Real norm() const { return re * re + im * im; }
  Real abs() const { return norm().sqrt(); }
  ComplexHP conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  ComplexHP& operator+=(const ComplexHP& o);
  ComplexHP& operator-=(const ComplexHP& o);
  ComplexHP& operator*=(const ComplexHP& o);
  /// Throws std::domain_error on division by zero.
  ComplexHP& operator/=(const ComplexHP& o);

  friend ComplexHP operator+(ComplexHP a, const ComplexHP& b) { return a += b; }
  friend ComplexHP operator-(ComplexHP a, const ComplexHP& b) { return a -= b; }
  friend ComplexHP operator*(ComplexHP a, const ComplexHP& b) { return a *= b; }
  friend ComplexHP operator/(ComplexHP a, const ComplexHP& b) { return a /= b; }
  friend bool operator==(const ComplexHP& a, const ComplexHP& b) { return a.re == b.re && a.im == b.im; }
};

/// Parses a complex value spec at the given precision.
///
/// Accepted forms: a whitelisted expression tag ("sqrt2+sqrt3*i", "e+pi*i",
/// see named_constants()), or a decimal pair "re,im". Throws
/// std::invalid_argument on anything else.
ComplexHP parse_complex(std::string_view text, long precision_bits);

/// Names accepted by parse_complex as expression tags.
const std::vector<std::string>& named_constants();

}  // namespace gdlab
