#include "gdlab/hp.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>

namespace gdlab {

namespace {

long checked_precision(long bits) {
  if (bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision_bits must be >= " + std::to_string(kMinPrecisionBits));
  }
  return bits;
}

// Promotes `target` in place to at least `bits` without losing its value.
void promote(Real& target, long bits) {
  if (target.precision() < bits) target = target.with_precision(bits);
}

}  // namespace

Real::Real(long precision_bits) {
  mpfr_init2(v_, checked_precision(precision_bits));
  mpfr_set_zero(v_, 1);
}

Real::Real(double value, long precision_bits) {
  mpfr_init2(v_, checked_precision(precision_bits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(std::int64_t value, long precision_bits) {
  mpfr_init2(v_, checked_precision(precision_bits));
  mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::parse(std::string_view text, long precision_bits) {
  Real r(precision_bits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::pi(long precision_bits) {
  Real r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::e(long precision_bits) {
  Real one(std::int64_t{1}, precision_bits);
  Real r(precision_bits);
  mpfr_exp(r.v_, one.v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt_of(std::int64_t n, long precision_bits) {
  return Real(n, precision_bits).sqrt();
}

Real Real::with_precision(long precision_bits) const {
  Real r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::exponent() const {
  if (is_zero()) return LONG_MIN;
  return static_cast<long>(mpfr_get_exp(v_));
}

Real Real::floor() const {
  Real r(precision());
  mpfr_floor(r.v_, v_);
  return r;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::sqrt() const {
  Real r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

std::int64_t Real::to_int64() const {
  if (!mpfr_integer_p(v_) || !mpfr_fits_slong_p(v_, MPFR_RNDN)) {
    throw std::overflow_error("value is not an int64 integer: " + to_string());
  }
  return static_cast<std::int64_t>(mpfr_get_si(v_, MPFR_RNDN));
}

std::string Real::to_string(int digits) const {
  std::unique_ptr<char[]> buf(new char[static_cast<std::size_t>(digits) + 32]);
  mpfr_snprintf(buf.get(), static_cast<std::size_t>(digits) + 32, "%.*Rg", digits, v_);
  return buf.get();
}

Real& Real::operator+=(const Real& o) {
  promote(*this, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  promote(*this, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  promote(*this, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  promote(*this, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real operator*(const Real& a, std::int64_t k) {
  Real r(a.precision());
  mpfr_mul_si(r.raw(), a.raw(), static_cast<long>(k), MPFR_RNDN);
  return r;
}

Real operator*(std::int64_t k, const Real& a) { return a * k; }

ComplexHP& ComplexHP::operator+=(const ComplexHP& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexHP& ComplexHP::operator-=(const ComplexHP& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexHP& ComplexHP::operator*=(const ComplexHP& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexHP& ComplexHP::operator/=(const ComplexHP& o) {
  Real d = o.norm();
  if (d.is_zero()) throw std::domain_error("complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

namespace {

using Builder = std::function<ComplexHP(long)>;

const std::map<std::string, Builder, std::less<>>& constant_table() {
  static const std::map<std::string, Builder, std::less<>> table = {
      {"sqrt2+sqrt3*i", [](long p) { return ComplexHP{Real::sqrt_of(2, p), Real::sqrt_of(3, p)}; }},
      {"e+pi*i", [](long p) { return ComplexHP{Real::e(p), Real::pi(p)}; }},
      {"pi+e*i", [](long p) { return ComplexHP{Real::pi(p), Real::e(p)}; }},
      {"sqrt2*i", [](long p) { return ComplexHP{Real(p), Real::sqrt_of(2, p)}; }},
      {"sqrt3+sqrt5*i", [](long p) { return ComplexHP{Real::sqrt_of(3, p), Real::sqrt_of(5, p)}; }},
      {"(sqrt2+sqrt3*i)/3",
       [](long p) {
         Real three(std::int64_t{3}, p);
         return ComplexHP{Real::sqrt_of(2, p) / three, Real::sqrt_of(3, p) / three};
       }},
      {"golden+sqrt2*i",
       [](long p) {
         Real one(std::int64_t{1}, p);
         Real two(std::int64_t{2}, p);
         return ComplexHP{(one + Real::sqrt_of(5, p)) / two, Real::sqrt_of(2, p)};
       }},
  };
  return table;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

const std::vector<std::string>& named_constants() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : constant_table()) v.push_back(k);
    return v;
  }();
  return names;
}

ComplexHP parse_complex(std::string_view text, long precision_bits) {
  text = trim(text);
  const auto& table = constant_table();
  if (auto it = table.find(text); it != table.end()) return it->second(precision_bits);
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    return ComplexHP{Real::parse(trim(text), precision_bits), Real(precision_bits)};
  }
  return ComplexHP{Real::parse(trim(text.substr(0, comma)), precision_bits),
                   Real::parse(trim(text.substr(comma + 1)), precision_bits)};
}

}  // namespace gdlab
