#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gdlab/expsum.hpp"
#include "gdlab/vaaler.hpp"

using namespace gdlab;
using std::numbers::pi;

namespace {

// Fejer kernel closed form of sigma.
double sigma_closed(double x, int J) {
  const double s = std::sin(pi * x);
  if (std::abs(s) < 1e-300) return 0.5;
  const double k = J + 1.0;
  const double num = std::sin(pi * k * x);
  return num * num / (2.0 * k * k * s * s);
}

// Real sine series of psi*.
double psi_star_sine(double x, int J) {
  double s = 0.0;
  for (int j = 1; j <= J; ++j) s -= w_weight(j / (J + 1.0)) * std::sin(2 * pi * j * x) / (pi * j);
  return s;
}

}  // namespace

TEST(Psi, Examples) {
  EXPECT_DOUBLE_EQ(psi(0.25), -0.25);
  EXPECT_DOUBLE_EQ(psi(0.0), -0.5);
  EXPECT_DOUBLE_EQ(psi(-0.25), 0.25);
  EXPECT_DOUBLE_EQ(psi(3.75), 0.25);
}

TEST(WWeight, ExamplesAndDomain) {
  EXPECT_NEAR(w_weight(0.5), 0.5, 1e-15);
  EXPECT_NEAR(w_weight(-0.5), 0.5, 1e-15);
  EXPECT_NEAR(w_weight(1e-6), 1.0, 1e-4);
  EXPECT_THROW(w_weight(0.0), std::domain_error);
  EXPECT_THROW(w_weight(1.0), std::domain_error);
  EXPECT_THROW(w_weight(-1.2), std::domain_error);
}

TEST(VaalerPoly, RejectsNonPositiveDegree) {
  EXPECT_THROW(VaalerPoly(0), std::invalid_argument);
  EXPECT_THROW(psi_star(0.1, -3), std::invalid_argument);
}

TEST(VaalerPoly, CoefficientFormulas) {
  for (int J : {1, 7, 40}) {
    const VaalerPoly v(J);
    for (int j = 1; j <= J; ++j) {
      const std::complex<double> want = -1.0 / (2.0 * pi * std::complex<double>(0.0, j)) * w_weight(j / (J + 1.0));
      EXPECT_NEAR(std::abs(v.psi_coeff[j] - want), 0.0, 1e-15);
    }
    for (int j = 0; j <= J; ++j) EXPECT_DOUBLE_EQ(v.sigma_coeff[j], (1.0 - j / (J + 1.0)) / (2.0 * J + 2.0));
  }
}

TEST(PsiStar, Examples) {
  for (int J : {1, 5, 20, 100}) {
    EXPECT_NEAR(psi_star(0.0, J), 0.0, 1e-15);
    EXPECT_NEAR(psi_star(0.5, J), 0.0, 1e-13);
    EXPECT_NEAR(sigma(0.0, J), 0.5, 1e-13);
  }
  EXPECT_NEAR(sigma(0.0, 1), 0.5, 1e-15);
  EXPECT_LE(std::abs(psi_star(0.25, 5) - psi(0.25)), sigma(0.25, 5));
}

TEST(PsiStar, MatchesClosedForms) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int J : {1, 5, 20, 100}) {
    const VaalerPoly v(J);
    for (int k = 0; k < 500; ++k) {
      const double x = u(rng);
      ASSERT_NEAR(v.psi_star(x), psi_star_sine(x, J), 1e-12);
      ASSERT_NEAR(v.sigma(x), sigma_closed(x, J), 1e-11);
    }
  }
}

TEST(Sigma, IntegralOverPeriod) {
  for (int J : {1, 5, 20, 100}) {
    const VaalerPoly v(J);
    const int nodes = 8 * (J + 1);
    double s = 0.0;
    for (int k = 0; k < nodes; ++k) s += v.sigma(static_cast<double>(k) / nodes);
    EXPECT_NEAR(s / nodes, 1.0 / (2.0 * J + 2.0), 1e-9);
  }
}

TEST(Vaaler, MajorantOnGridNearJumpAndRandomPoints) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int J : {1, 5, 20, 100}) {
    const VaalerPoly v(J);
    std::vector<double> xs{0.0, 1.0 - 1e-6, 1e-6, 0.5};
    for (int k = 0; k < 2000; ++k) xs.push_back(k / 2000.0);
    for (int k = 0; k < 200; ++k) xs.push_back(u(rng));
    for (double x : xs) {
      const double s = v.sigma(x);
      ASSERT_GE(s, -1e-12) << "J=" << J << " x=" << x;
      ASSERT_LE(std::abs(v.psi_star(x) - psi(x)), s + 1e-10) << "J=" << J << " x=" << x;
    }
  }
}

TEST(Vaaler, Periodicity) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const VaalerPoly v(20);
  for (int k = 0; k < 500; ++k) {
    const double x = u(rng);
    if (x < 1e-9 || x > 1 - 1e-9) continue;
    ASSERT_NEAR(psi(x + 1.0), psi(x), 1e-12);
    ASSERT_NEAR(v.psi_star(x + 1.0), v.psi_star(x), 1e-12);
    ASSERT_NEAR(v.sigma(x - 2.0), v.sigma(x), 1e-12);
  }
}

TEST(TrigDegrees, FollowTheDefiningFloors) {
  const std::vector<GaussianInt> d2s{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {0, 3}, {2, 2}, {3, 1}};
  for (const auto& d2 : d2s) {
    for (double N : {16.0, 100.0, 1000.0}) {
      SieveParams sp;
      sp.P = N / 2.0;
      sp.d2 = d2;
      sp.desk_scale = true;
      const TrigDegrees J = trig_degrees(sp, N);
      const double ad2 = std::sqrt(static_cast<double>(d2.norm()));
      const double X = std::pow(N, sp.eps) / sp.mu();
      EXPECT_EQ(J.J2, static_cast<std::int64_t>(std::floor(X)));
      EXPECT_EQ(J.J1, static_cast<std::int64_t>(std::floor(X * ad2)));
      // The defining floors give |d2| J2 - 1 < J1 < |d2| (J2 + 1); the two sides
      // differ by at most 1 only when |d2| <= 2.
      EXPECT_GT(static_cast<double>(J.J1), ad2 * static_cast<double>(J.J2) - 1.0);
      EXPECT_LT(static_cast<double>(J.J1), ad2 * static_cast<double>(J.J2 + 1));
      if (d2.norm() == 1) {
        EXPECT_EQ(J.J1, J.J2);
      }
    }
  }
}
