#include "gdlab/sectorcount.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gdlab {

namespace {

void check_star_delta(double delta) {
  if (!(delta > 0.0 && delta <= 0.5)) throw std::invalid_argument("delta must lie in (0, 1/2]");
}

}  // namespace

CountReport make_report(std::string flavor, const Region& reg, double delta, std::complex<double> c,
                        std::uint64_t empirical, double main_term) {
  if (!(main_term > 0.0)) throw std::domain_error("main term must be positive");
  return {std::move(flavor), reg, delta, c, empirical, main_term,
          static_cast<double>(empirical) / main_term - 1.0};
}

std::uint64_t pi_count(const Region& reg, const SieveLimits& limits) { return count_region_primes(reg, limits); }

double pnt_main_term(const Region& reg) {
  if (!(reg.r_max() > 1.0)) throw std::domain_error("pnt_main_term needs r_max > 1");
  const double r2 = reg.r_max() * reg.r_max();
  return (reg.theta_max() - reg.theta_min()) * (r2 - reg.r_min() * reg.r_min()) / std::log(r2);
}

std::uint64_t pi_star_count(const Region& reg, double delta, const ComplexHP& c, const SieveLimits& limits) {
  check_star_delta(delta);
  const LatticeFrac pc(c);
  return count_region_primes_if(reg, limits, [&](const GaussianInt& p) { return pc.sup_dist(p) <= delta; });
}

std::uint64_t pi_disk_count(const Region& reg, double delta, const ComplexHP& c, const SieveLimits& limits) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const LatticeFrac pc(c);
  const double d2 = delta * delta;
  return count_region_primes_if(reg, limits, [&](const GaussianInt& p) { return std::norm(pc.reduce(p)) <= d2; });
}

double signi_main_term(double delta, std::uint64_t prime_count) {
  check_star_delta(delta);
  return 4.0 * delta * delta * static_cast<double>(prime_count);
}

double signi_main_term(const Region& reg, double delta, const SieveLimits& limits) {
  check_star_delta(delta);
  return signi_main_term(delta, pi_count(reg, limits));
}

}  // namespace gdlab
