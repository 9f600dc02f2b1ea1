#include "gdlab/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gdlab/detail/lattice.hpp"

namespace gdlab {

namespace {

double modulus(const GaussianInt& z) { return std::sqrt(static_cast<double>(z.norm())); }

// [x + w] - [x - w]: integers k with x - k in [-w, w).
std::uint64_t box_hits(double x, double w) {
  return static_cast<std::uint64_t>(std::floor(x + w) - std::floor(x - w));
}

bool in_half_open_box(const ComplexHP& z, double w) {
  const std::complex<double> v = z.to_complex();
  return v.real() >= -w && v.real() < w && v.imag() >= -w && v.imag() < w;
}

ComplexHP gaussian_quotient(const ComplexHP& z, const GaussianInt& d) { return z / to_hp(d, z.precision()); }

}  // namespace

FNResult count_FN(const ComplexHP& alpha, const ComplexHP& c, double eps, double N, const SieveLimits& limits) {
  if (!(eps > 0.0 && eps < 1.0 / 12.0)) throw std::invalid_argument("count_FN needs 0 < eps < 1/12");
  if (!(N > 0.0)) throw std::invalid_argument("count_FN needs N > 0");
  FNResult out;
  if (N < std::sqrt(2.0)) return out;

  const long prec = std::max(alpha.precision(), c.precision());
  const ComplexHP a = alpha.with_precision(prec);
  const ComplexHP ca = c.with_precision(prec) * a;
  const double alpha_ulp = std::max(1.0, std::abs(a.to_complex())) * std::ldexp(1.0, static_cast<int>(-prec + 1));

  for (const GaussianInt& p : sieve_region(Region::disk(N), limits)) {
    const double ap = modulus(p);
    const double bound = std::pow(ap, eps - 1.0 / 12.0);
    if (ap * alpha_ulp >= 1e-6 * bound) {
      throw PrecisionError("count_FN: " + std::to_string(prec) + " bits too few for |p| = " + std::to_string(ap));
    }
    const ComplexHP php = to_hp(p, prec);
    const ComplexHP pa = php * a;
    const ComplexHP pca = php * ca;
    std::vector<std::pair<GaussianInt, double>> rs;
    for (const GaussianInt& r : enumerate_disk(pa, bound)) {
      if (!is_gaussian_prime(r)) continue;
      rs.emplace_back(r, (pa - to_hp(r, prec)).abs().to_double());
    }
    if (rs.empty()) continue;
    std::vector<std::pair<GaussianInt, double>> qs;
    for (const GaussianInt& q : enumerate_disk(pca, bound)) qs.emplace_back(q, (pca - to_hp(q, prec)).abs().to_double());
    for (const auto& [r, er] : rs) {
      for (const auto& [q, eq] : qs) out.triples.push_back({p, q, r, er, eq});
    }
  }
  out.count = out.triples.size();
  return out;
}

double SieveParams::mu() const { return std::pow(P / 2.0, eps - 1.0 / 12.0); }

bool SieveParams::pcondit() const { return P > std::pow(2.0, 1.0 + 1.0 / (1.0 / 12.0 - eps)); }

void SieveParams::validate() const {
  if (!(eps > 0.0 && eps < 1.0 / 12.0)) throw std::invalid_argument("sieve params need 0 < eps < 1/12");
  if (!(P > 0.0) || !std::isfinite(P)) throw std::invalid_argument("sieve params need finite P > 0");
  if (d1.is_zero() || d2.is_zero()) throw std::invalid_argument("sieve params need d1, d2 != 0");
  if (!desk_scale && !pcondit()) {
    throw std::invalid_argument("P = " + std::to_string(P) + " gives mu = " + std::to_string(mu()) +
                                " >= 1/2; set desk_scale to run below the bound");
  }
}

std::vector<APEntry> build_AP(const SieveParams& sp) {
  sp.validate();
  const double mu = sp.mu();
  const LatticeFrac na(sp.alpha);
  const LatticeFrac nca(sp.c * sp.alpha);
  std::vector<APEntry> out;
  const auto r = static_cast<std::int64_t>(std::floor(sp.P));
  detail::scan_annulus(sp.P / 2.0, sp.P, -r, r, [&](const GaussianInt& n) {
    if (na.sup_dist(n) > mu || nca.sup_dist(n) > mu) return;
    out.push_back({n, n * na.nearest(n).first});
  });
  return out;
}

bool is_G2(const GaussianInt& z) {
  if (z.is_zero()) throw std::invalid_argument("is_G2: zero");
  return gaussian_omega(z) == 2;
}

std::uint64_t count_G2_in_AP(const SieveParams& sp) {
  std::uint64_t count = 0;
  for (const APEntry& e : build_AP(sp)) {
    if (!e.product.is_zero() && is_G2(e.product)) ++count;
  }
  return count;
}

std::uint64_t count_SP(const SieveParams& sp) {
  sp.validate();
  const double mu = sp.mu();
  const double w1 = mu / modulus(sp.d2);
  const long prec = sp.alpha.precision();
  const ComplexHP d1a = to_hp(sp.d1, prec) * sp.alpha;
  const LatticeFrac x(gaussian_quotient(d1a, sp.d2));
  const LatticeFrac y(d1a * sp.c);
  // P/(2|d1|) < |m| <= P/|d1|, tested as P^2/4 < N(m) N(d1) <= P^2.
  return detail::reduce_scaled_annulus<std::uint64_t>(sp.P * sp.P / 4.0, sp.P * sp.P, sp.d1.norm(),
                                                      [&](const GaussianInt& m) -> std::uint64_t {
    const std::complex<double> u = x.reduce(m);
    const std::uint64_t k1 = box_hits(u.real(), w1) * box_hits(u.imag(), w1);
    if (k1 == 0) return 0;
    const std::complex<double> v = y.reduce(m);
    return k1 * box_hits(v.real(), mu) * box_hits(v.imag(), mu);
  });
}

std::uint64_t direct_count_SP(const SieveParams& sp) {
  sp.validate();
  const double mu = sp.mu();
  const long prec = sp.alpha.precision();
  const double ad2 = modulus(sp.d2);
  const ComplexHP ca = sp.c * sp.alpha;
  const ComplexHP d2hp = to_hp(sp.d2, prec);
  // Every g = d2 k with n alpha - g in the box has |n alpha / d2 - k| <= sqrt(2) mu / |d2|.
  const double reach1 = std::sqrt(2.0) * mu / ad2 + 1e-9;
  const double reach2 = std::sqrt(2.0) * mu + 1e-9;
  return detail::reduce_annulus<std::uint64_t>(sp.P / 2.0, sp.P, [&](const GaussianInt& n) -> std::uint64_t {
    if (!divides(sp.d1, n)) return 0;
    const ComplexHP nhp = to_hp(n, prec);
    const ComplexHP na = nhp * sp.alpha;
    std::uint64_t g_hits = 0;
    for (const GaussianInt& k : enumerate_disk(na / d2hp, reach1)) {
      if (in_half_open_box(na - d2hp * to_hp(k, prec), mu)) ++g_hits;
    }
    if (g_hits == 0) return 0;
    const ComplexHP nca = nhp * ca;
    std::uint64_t h_hits = 0;
    for (const GaussianInt& h : enumerate_disk(nca, reach2)) {
      if (in_half_open_box(nca - to_hp(h, prec), mu)) ++h_hits;
    }
    return g_hits * h_hits;
  });
}

double sp_main_term(const SieveParams& sp) {
  const double mu = sp.mu();
  return 12.0 * std::numbers::pi * sp.P * sp.P * mu * mu * mu * mu /
         (static_cast<double>(sp.d1.norm()) * static_cast<double>(sp.d2.norm()));
}

double error_EP(const SieveParams& sp) { return static_cast<double>(count_SP(sp)) - sp_main_term(sp); }

std::uint64_t count_GP(const SieveParams& sp) {
  sp.validate();
  const double mu = sp.mu();
  const LatticeFrac na(sp.alpha);
  const LatticeFrac nca(sp.c * sp.alpha);
  return detail::reduce_annulus<std::uint64_t>(sp.P / 2.0, sp.P, [&](const GaussianInt& n) -> std::uint64_t {
    if (!divides(sp.d1, n)) return 0;
    if (na.sup_dist(n) > mu || nca.sup_dist(n) > mu) return 0;
    if (!is_gaussian_prime(n)) return 0;
    const GaussianInt f = na.nearest(n).first;
    if (f.is_zero() || !divides(sp.d2, f)) return 0;
    return is_gaussian_prime(f) ? 1 : 0;
  });
}

}  // namespace gdlab
