#pragma once

// Simultaneous approximation |p alpha - r|, |p c alpha - q| <= |p|^(eps - 1/12)
// with p, r Gaussian primes, and the sieve-side counts A_P, S_P, E_P, G_P.

#include <cstdint>
#include <vector>

#include "gdlab/gaussint.hpp"
#include "gdlab/hp.hpp"

namespace gdlab {

struct ApproxTriple {
  GaussianInt p;
  GaussianInt q;
  GaussianInt r;
  double err_r = 0.0;  // |p alpha - r|
  double err_q = 0.0;  // |p c alpha - q|
};

struct FNResult {
  std::uint64_t count = 0;
  std::vector<ApproxTriple> triples;  // p in (norm, arg) order, then r, q in (re, im) order
};

/// All triples (p, q, r) with p, r prime, |p| <= N. Requires 0 < eps < 1/12.
/// Throws PrecisionError when |p| ulp(alpha) reaches 1e-6 |p|^(eps - 1/12).
FNResult count_FN(const ComplexHP& alpha, const ComplexHP& c, double eps, double N, const SieveLimits& limits = {});

struct SieveParams {
  ComplexHP alpha{0.0, 0.0};
  ComplexHP c{0.0, 0.0};
  double eps = 0.05;
  double P = 0.0;
  GaussianInt d1{1};
  GaussianInt d2{1};
  /// Admit P below the bound that makes mu < 1/2. The conditions ||.|| <= mu
  /// are then vacuous for indicator counts.
  bool desk_scale = false;

  /// (P/2)^(eps - 1/12)
  double mu() const;
  /// P > 2^(1 + 1/(1/12 - eps)), equivalently mu < 1/2.
  bool pcondit() const;
  /// Throws std::invalid_argument on bad eps, P, d1, d2, and when pcondit()
  /// fails without desk_scale.
  void validate() const;
};

struct APEntry {
  GaussianInt n;
  GaussianInt product;  // n * f(n alpha)
};

/// n with P/2 < |n| <= P, ||n alpha|| <= mu and ||n c alpha|| <= mu, ordered
/// by (re, im).
std::vector<APEntry> build_AP(const SieveParams& sp);

/// Omega(z) == 2. Throws std::invalid_argument for z = 0.
bool is_G2(const GaussianInt& z);

std::uint64_t count_G2_in_AP(const SieveParams& sp);

/// Reduced form over m with P/(2|d1|) < |m| <= P/|d1|:
///   sum_m prod_coords ([x + w] - [x - w])
/// with x the coordinates of m d1 alpha / d2 (w = mu/|d2|) and of m d1 c alpha
/// (w = mu). Each factor counts the integers k with x - k in [-w, w), so for
/// mu < 1/2 this is the number of m meeting both sup-norm conditions.
std::uint64_t count_SP(const SieveParams& sp);

/// The same count taken over n = m d1 directly:
///   #{g in d2 Z[i] : n alpha - g in [-mu, mu)^2} * #{h in Z[i] : n c alpha - h in [-mu, mu)^2}.
/// Agrees with count_SP up to box boundaries when d2 is an associate of a
/// rational integer; otherwise the d2-rotated box differs from the reduced one.
std::uint64_t direct_count_SP(const SieveParams& sp);

/// 12 pi P^2 mu^4 / (N(d1) N(d2))
double sp_main_term(const SieveParams& sp);

/// count_SP - sp_main_term
double error_EP(const SieveParams& sp);

/// n with P/2 < |n| <= P, d1 | n, d2 | f(n alpha), max(||n alpha||, ||n c alpha||) <= mu,
/// and both n and f(n alpha) Gaussian primes.
std::uint64_t count_GP(const SieveParams& sp);

}  // namespace gdlab
