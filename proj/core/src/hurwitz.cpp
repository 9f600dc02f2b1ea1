#include "gdlab/hurwitz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gdlab {

namespace {

Real pow2(long e, long prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

// Distance of frac(x) from 1/2.
Real half_gap(const Real& x) {
  const Real half(0.5, x.precision());
  return (x - x.floor() - half).abs();
}

}  // namespace

CFExpansion expand(const ComplexHP& c, int depth) {
  if (depth < 1) throw std::invalid_argument("expand: depth must be >= 1");
  if (!c.re.is_finite() || !c.im.is_finite()) throw std::invalid_argument("expand: c must be finite");

  const long prec = c.precision();
  const Real ulp = pow2(-prec, prec);
  const Real zero_cut = pow2(-prec / 2, prec);
  const Real rel_cut = pow2(-32, prec);

  CFExpansion out;
  out.target = c;
  out.precision_bits = prec;

  BigGaussian p_prev(1), p_prev2(0);
  BigGaussian q_prev(0), q_prev2(1);

  ComplexHP z = c.with_precision(prec);
  // Error bound on z in units of ulp.
  double err_ulps = z.abs().to_double();

  for (int k = 0; k < depth; ++k) {
    const Real err = ulp * Real(err_ulps, prec);
    if (half_gap(z.re) <= err || half_gap(z.im) <= err) {
      if (err <= zero_cut) throw TieError("expand: residual " + std::to_string(k) + " lies on Z + 1/2");
      throw PrecisionError("expand: residual " + std::to_string(k) + " too close to Z + 1/2 at " +
                           std::to_string(prec) + " bits");
    }
    const GaussianInt a = nearest_gaussian(z);
    out.coeffs.push_back(a);

    const BigGaussian ab = to_big(a);
    BigGaussian p = ab * p_prev + p_prev2;
    BigGaussian q = ab * q_prev + q_prev2;
    p_prev2 = std::move(p_prev);
    p_prev = p;
    q_prev2 = std::move(q_prev);
    q_prev = q;
    out.conv_num.push_back(std::move(p));
    out.conv_den.push_back(std::move(q));

    const ComplexHP d = z - to_hp(a, prec);
    const Real dabs = d.abs();
    if (dabs <= err) {
      if (err <= zero_cut) {
        out.terminated = true;
        break;
      }
      throw PrecisionError("expand: residual " + std::to_string(k) + " lost all significant bits at " +
                           std::to_string(prec) + " bits");
    }
    if (k + 1 == depth) break;

    z = ComplexHP(Real(std::int64_t{1}, prec), Real(prec)) / d;
    const double zabs = z.abs().to_double();
    out.residual_abs.push_back(zabs);
    // 1/(d + h) - 1/d ~ -h/d^2, plus rounding of the division itself.
    err_ulps = err_ulps * zabs * zabs * (1.0 + 1e-9) + 4.0 * zabs + 1.0;
    if (Real(err_ulps, prec) * ulp > rel_cut * Real(zabs, prec)) {
      throw PrecisionError("expand: relative error of residual " + std::to_string(k + 1) + " exceeds 2^-32 at " +
                           std::to_string(prec) + " bits");
    }
  }
  return out;
}

CFExpansion expand_adaptive(const std::function<ComplexHP(long)>& source, int depth, long start_bits,
                            long max_bits) {
  for (long bits = start_bits;; bits *= 2) {
    try {
      return expand(source(bits), depth);
    } catch (const PrecisionError&) {
      if (bits * 2 > max_bits) throw;
    }
  }
}

std::pair<BigGaussian, BigGaussian> convergent(const CFExpansion& exp, std::size_t k) {
  if (k >= exp.coeffs.size()) {
    throw std::out_of_range("convergent: index " + std::to_string(k) + " beyond " +
                            std::to_string(exp.coeffs.size()) + " coefficients");
  }
  return {exp.conv_num[k], exp.conv_den[k]};
}

ScaleSequence m_sequence(const CFExpansion& exp, int count) {
  if (count < 1) throw std::invalid_argument("m_sequence: count must be >= 1");
  const auto need = static_cast<std::size_t>(count) + 1;
  if (exp.conv_den.size() < need) {
    throw TerminatedExpansionError("m_sequence: expansion has " + std::to_string(exp.conv_den.size()) +
                                   " convergents, need " + std::to_string(need) + "; c looks rational");
  }
  ScaleSequence s;
  for (std::size_t k = 1; k < need; ++k) {
    const mpz_class n = norm(exp.conv_den[k]);
    s.values.push_back(n * n * n);
    if (s.values.size() > 1 && !(s.values[s.values.size() - 2] < s.values.back())) {
      throw std::logic_error("m_sequence: M_k not increasing at k=" + std::to_string(k));
    }
  }
  return s;
}

ScaleSequence m_sequence(const ComplexHP& c, int count) {
  const CFExpansion exp = expand(c, count + 1);
  if (exp.terminated && exp.coeffs.size() < static_cast<std::size_t>(count) + 1) {
    throw TerminatedExpansionError("m_sequence: c is in Q(i) at working precision");
  }
  return m_sequence(exp, count);
}

}  // namespace gdlab
