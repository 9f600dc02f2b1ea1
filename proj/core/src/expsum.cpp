#include "gdlab/expsum.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdlab/detail/lattice.hpp"
#include "gdlab/regions.hpp"

namespace gdlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double dist_to_int(const Real& x) {
  const Real f = x - x.floor();
  const double fd = f.to_double();
  return std::min(fd, 1.0 - fd);
}

double dist_to_int(double x) {
  const double f = x - std::floor(x);
  return std::min(f, 1.0 - f);
}

double capped_root(double dist, double cap) {
  const double inv = dist > 0.0 ? 1.0 / dist : std::numeric_limits<double>::infinity();
  return std::sqrt(std::min(inv, cap));
}

// Values of R in (A, B) where R * s crosses k, k +- 1/Y or k + 1/2.
void add_breakpoints(double s, double Y, double A, double B, std::int64_t cap, std::vector<double>& out) {
  if (s == 0.0) return;
  const double lo = std::min(s * A, s * B);
  const double hi = std::max(s * A, s * B);
  const auto k_lo = static_cast<std::int64_t>(std::floor(lo)) - 1;
  const auto k_hi = static_cast<std::int64_t>(std::ceil(hi)) + 1;
  if (3 * (k_hi - k_lo + 1) + static_cast<std::int64_t>(out.size()) > cap) {
    throw ResourceLimitError("av_integral: too many breakpoints for |z| B = " + std::to_string(hi));
  }
  const double offsets[] = {0.0, 1.0 / Y, -1.0 / Y, 0.5};
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    for (double o : offsets) {
      const double r = (static_cast<double>(k) + o) / s;
      if (r > A && r < B) out.push_back(r);
    }
  }
}

}  // namespace

std::complex<double> linear_sum(const ExpSumQuery& q, const ExpSumLimits& limits) {
  if (!(q.x_lo >= 0.0 && q.x_lo < q.x_hi)) throw std::invalid_argument("linear_sum needs 0 <= x_lo < x_hi");
  if (q.x_hi > limits.max_radius) {
    throw ResourceLimitError("linear_sum radius " + std::to_string(q.x_hi) + " exceeds cap");
  }
  const Region reg = q.sector ? Region(q.x_lo, q.x_hi, q.sector->first, q.sector->second)
                              : Region::annulus(q.x_lo, q.x_hi);
  const bool full = reg.full_circle();
  const LatticeFrac nk(q.kappa);
  return detail::reduce_annulus<std::complex<double>>(q.x_lo, q.x_hi, [&](const GaussianInt& n) {
    if (!full && !reg.contains_arg(arg(n))) return std::complex<double>{};
    return std::polar(1.0, kTwoPi * nk.reduce(n).imag());
  });
}

double small_bound(const ComplexHP& kappa, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("small_bound needs x > 0");
  return x * capped_root(dist_to_int(kappa.im), x) * capped_root(dist_to_int(kappa.re), x);
}

TrigDegrees trig_degrees(const SieveParams& sp, double N) {
  if (!(N >= 1.0)) throw std::invalid_argument("trig_degrees needs N >= 1");
  const double ne = std::pow(N, sp.eps);
  const double mu = sp.mu();
  return {static_cast<std::int64_t>(std::floor(ne * std::sqrt(static_cast<double>(sp.d2.norm())) / mu)),
          static_cast<std::int64_t>(std::floor(ne / mu))};
}

double trig_FP_term(const SieveParams& sp, const GaussianInt& n1, const GaussianInt& n2, const ExpSumLimits& limits) {
  const long prec = std::max(sp.alpha.precision(), sp.c.precision());
  const ComplexHP inner = to_hp(n1, prec) / to_hp(sp.d2, prec) + to_hp(n2, prec) * sp.c;
  const ComplexHP kappa = to_hp(sp.d1, prec) * inner * sp.alpha;
  const double ad1 = std::sqrt(static_cast<double>(sp.d1.norm()));
  return std::abs(linear_sum({kappa, sp.P / (2.0 * ad1), sp.P / ad1, std::nullopt}, limits));
}

double trig_FP(const SieveParams& sp, double N, const ExpSumLimits& limits) {
  sp.validate();
  const TrigDegrees J = trig_degrees(sp, N);
  const ComplexHP origin(0.0, 0.0);
  const std::vector<GaussianInt> n1s = enumerate_disk(origin, 2.0 * static_cast<double>(J.J1));
  const std::vector<GaussianInt> n2s = enumerate_disk(origin, 2.0 * static_cast<double>(J.J2));
  const double ad1 = std::sqrt(static_cast<double>(sp.d1.norm()));
  const double points = static_cast<double>(annulus_lattice_count(sp.P / (2.0 * ad1), sp.P / ad1));
  const double work = points * static_cast<double>(n1s.size()) * static_cast<double>(n2s.size());
  if (work > limits.max_work) {
    throw ResourceLimitError("trig_FP work " + std::to_string(work) + " exceeds cap; J1=" + std::to_string(J.J1) +
                             " J2=" + std::to_string(J.J2));
  }
  double total = 0.0;
  for (const GaussianInt& n1 : n1s) {
    for (const GaussianInt& n2 : n2s) {
      if (n1.is_zero() && n2.is_zero()) continue;
      total += trig_FP_term(sp, n1, n2, limits);
    }
  }
  const double mu = sp.mu();
  return mu * mu * mu * mu / static_cast<double>(sp.d2.norm()) * total;
}

double av_integral(const ComplexHP& z, double Y, double A, double B, const AvIntegralOptions& opt) {
  if (!(A > 0.0 && A < B) || !std::isfinite(B)) throw std::invalid_argument("av_integral needs 0 < A < B < inf");
  if (!(Y > 0.0)) throw std::invalid_argument("av_integral needs Y > 0");
  using boost::math::quadrature::gauss_kronrod;
  const std::complex<double> zd = z.to_complex();

  auto inner = [&](double theta) {
    const std::complex<double> w = zd * std::polar(1.0, theta);
    std::vector<double> cuts{A, B};
    add_breakpoints(w.real(), Y, A, B, opt.max_breakpoints, cuts);
    add_breakpoints(w.imag(), Y, A, B, opt.max_breakpoints, cuts);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto g = [&](double R) {
      return capped_root(dist_to_int(R * w.imag()), Y) * capped_root(dist_to_int(R * w.real()), Y);
    };
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      sum += gauss_kronrod<double, 15>::integrate(g, cuts[i], cuts[i + 1], 6, 1e-9);
    }
    return sum;
  };

  double total = 0.0;
  double err_total = 0.0;
  const double step = kTwoPi / opt.theta_pieces;
  for (int k = 0; k < opt.theta_pieces; ++k) {
    const double lo = -std::numbers::pi + k * step;
    const double hi = (k + 1 == opt.theta_pieces) ? std::numbers::pi : lo + step;
    double err = 0.0;
    total += gauss_kronrod<double, 15>::integrate(inner, lo, hi, 12, opt.rel_tol * 0.1, &err);
    err_total += err;
  }
  if (!(err_total <= opt.rel_tol * std::abs(total))) {
    throw QuadratureError("av_integral: error estimate " + std::to_string(err_total) + " vs value " +
                          std::to_string(total));
  }
  return total;
}

}  // namespace gdlab
