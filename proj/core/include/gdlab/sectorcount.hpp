#pragma once

// Prime counts in annular sectors, with and without a Diophantine condition
// on p*c, and their main terms.

#include <complex>
#include <cstdint>
#include <string>

#include "gdlab/gaussint.hpp"
#include "gdlab/hp.hpp"
#include "gdlab/regions.hpp"

namespace gdlab {

struct CountReport {
  std::string flavor;  // "pnt", "star", "disk"
  Region region;
  double delta = 0.0;
  std::complex<double> c{};
  std::uint64_t empirical = 0;
  double main_term = 0.0;
  double rel_dev = 0.0;
};

/// Fills rel_dev = empirical/main_term - 1. Throws std::domain_error unless
/// main_term > 0.
CountReport make_report(std::string flavor, const Region& reg, double delta, std::complex<double> c,
                        std::uint64_t empirical, double main_term);

std::uint64_t pi_count(const Region& reg, const SieveLimits& limits = {});

/// (theta_max - theta_min)(r_max^2 - r_min^2) / log(r_max^2). r_max > 1.
double pnt_main_term(const Region& reg);

/// Primes p in reg with ||p c|| <= delta (sup norm). delta in (0, 1/2].
std::uint64_t pi_star_count(const Region& reg, double delta, const ComplexHP& c, const SieveLimits& limits = {});

/// Primes p in reg with dist(p c, Z[i]) <= delta (Euclidean). delta > 0.
std::uint64_t pi_disk_count(const Region& reg, double delta, const ComplexHP& c, const SieveLimits& limits = {});

/// 4 delta^2 pi_count(reg). delta in (0, 1/2].
double signi_main_term(const Region& reg, double delta, const SieveLimits& limits = {});
double signi_main_term(double delta, std::uint64_t prime_count);

}  // namespace gdlab
