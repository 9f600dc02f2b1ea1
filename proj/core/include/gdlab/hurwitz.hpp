#pragma once

// Hurwitz (nearest-integer) continued fractions over Z[i].

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "gdlab/gaussint.hpp"
#include "gdlab/hp.hpp"

namespace gdlab {

struct CFExpansion {
  ComplexHP target{0.0, 0.0};
  std::vector<GaussianInt> coeffs;   // a_0, a_1, ...
  std::vector<BigGaussian> conv_num;  // p_k
  std::vector<BigGaussian> conv_den;  // q_k
  std::vector<double> residual_abs;   // |z_k| for k >= 1
  bool terminated = false;
  long precision_bits = kDefaultPrecisionBits;
};

/// Up to `depth` partial quotients a_k = f(z_k), z_0 = c, z_{k+1} = 1/(z_k - a_k).
///
/// A running absolute error bound e_k on z_k is propagated through each step.
/// When |z_k - a_k| <= e_k the residual is taken as zero (terminated = true)
/// provided e_k <= 2^(-p/2); otherwise, or when the relative error of a
/// residual exceeds 2^-32, PrecisionError is thrown. A coordinate of z_k
/// within e_k of Z + 1/2 throws TieError under the same 2^(-p/2) rule.
CFExpansion expand(const ComplexHP& c, int depth);

/// Re-evaluates `source` at doubled precision until expand() succeeds.
CFExpansion expand_adaptive(const std::function<ComplexHP(long)>& source, int depth,
                            long start_bits = kDefaultPrecisionBits, long max_bits = 1L << 14);

/// (p_k, q_k). Throws std::out_of_range when k >= coeffs.size().
std::pair<BigGaussian, BigGaussian> convergent(const CFExpansion& exp, std::size_t k);

struct ScaleSequence {
  std::vector<mpz_class> values;  // M_1 < M_2 < ...
};

/// M_k = norm(q_k)^3 for k = 1..count. Throws TerminatedExpansionError when
/// the expansion of c ends first.
ScaleSequence m_sequence(const ComplexHP& c, int count);
ScaleSequence m_sequence(const CFExpansion& exp, int count);

}  // namespace gdlab
