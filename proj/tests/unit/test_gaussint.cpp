#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "brute.hpp"
#include "gdlab/gaussint.hpp"

using namespace gdlab;

namespace {

const std::array<GaussianInt, 4> kUnits{GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0}, GaussianInt{0, -1}};

ComplexHP hp(double re, double im) { return ComplexHP(re, im, 128); }

}  // namespace

TEST(GaussianInt, Norm) {
  EXPECT_EQ(norm(GaussianInt{1, 1}), 2);
  EXPECT_EQ(norm(GaussianInt{0, 0}), 0);
  EXPECT_EQ(norm(GaussianInt{4, 1}), 17);
}

TEST(GaussianInt, NormIsMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-100000, 100000);
  for (int k = 0; k < 1000; ++k) {
    const GaussianInt w{d(rng), d(rng)};
    const GaussianInt z{d(rng), d(rng)};
    ASSERT_EQ(to_big(w * z).norm(), to_big(w).norm() * to_big(z).norm());
  }
}

TEST(GaussianInt, OverflowIsDetected) {
  const GaussianInt big{std::int64_t{1} << 40, 0};
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(narrow(to_big(big) * to_big(big)), std::overflow_error);
}

TEST(GaussianInt, Divisibility) {
  EXPECT_TRUE(divides({1, 1}, {2, 0}));
  EXPECT_FALSE(divides({1, 2}, {3, 0}));
  EXPECT_EQ(exact_quotient({2, 0}, {1, 1}), (GaussianInt{1, -1}));
  EXPECT_THROW(divides({0, 0}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(exact_quotient({3, 0}, {1, 2}), std::invalid_argument);
}

TEST(GaussianPrime, Examples) {
  EXPECT_TRUE(is_gaussian_prime({1, 1}));
  EXPECT_FALSE(is_gaussian_prime({2, 0}));
  EXPECT_TRUE(is_gaussian_prime({3, 0}));
  EXPECT_TRUE(is_gaussian_prime({4, 1}));
  EXPECT_FALSE(is_gaussian_prime({0, 0}));
  EXPECT_FALSE(is_gaussian_prime({0, -1}));
  EXPECT_FALSE(is_gaussian_prime({5, 0}));
  EXPECT_TRUE(is_gaussian_prime({0, -7}));
}

TEST(GaussianPrime, AgreesWithDivisorSearchUpToNorm1e4) {
  const std::int64_t R = 100;
  for (std::int64_t a = -R; a <= R; ++a) {
    for (std::int64_t b = -R; b <= R; ++b) {
      if (a * a + b * b > 10000) continue;
      ASSERT_EQ(is_gaussian_prime({a, b}), oracle::is_prime_by_divisor_search(a, b)) << a << "+" << b << "i";
    }
  }
}

TEST(GaussianPrime, ClosedUnderAssociatesAndConjugation) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-3000, 3000);
  for (int k = 0; k < 2000; ++k) {
    const GaussianInt z{d(rng), d(rng)};
    const bool p = is_gaussian_prime(z);
    for (const auto& u : kUnits) ASSERT_EQ(is_gaussian_prime(u * z), p);
    ASSERT_EQ(is_gaussian_prime(z.conj()), p);
  }
}

TEST(GaussianOmega, CountsPrimeFactorsWithMultiplicity) {
  EXPECT_EQ(gaussian_omega({0, 2}), 2);
  EXPECT_EQ(gaussian_omega({1, 1}), 1);
  EXPECT_EQ(gaussian_omega({3, 3}), 2);
  EXPECT_EQ(gaussian_omega({4, 0}), 4);
  EXPECT_EQ(gaussian_omega({9, 0}), 2);
  EXPECT_EQ(gaussian_omega({1, 0}), 0);
  EXPECT_THROW(gaussian_omega({0, 0}), std::invalid_argument);
}

TEST(SieveRegion, DiskOfRadius2) {
  const auto ps = sieve_region(Region::disk(2.0));
  const std::set<GaussianInt> got(ps.begin(), ps.end());
  const std::set<GaussianInt> want{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  EXPECT_EQ(got, want);
}

TEST(SieveRegion, DiskOfRadius3) { EXPECT_EQ(sieve_region(Region::disk(3.0)).size(), 16U); }

TEST(SieveRegion, FirstQuadrantSector) {
  const auto ps = sieve_region(Region(0.0, 3.0, 0.0, std::numbers::pi / 2));
  const std::set<GaussianInt> got(ps.begin(), ps.end());
  const std::set<GaussianInt> want{{1, 1}, {2, 1}, {1, 2}, {0, 3}};
  EXPECT_EQ(got, want);
}

TEST(SieveRegion, OrderedByNormThenArgument) {
  const auto ps = sieve_region(Region::disk(30.0));
  for (std::size_t k = 1; k < ps.size(); ++k) {
    const auto n0 = ps[k - 1].norm();
    const auto n1 = ps[k].norm();
    ASSERT_TRUE(n0 < n1 || (n0 == n1 && arg(ps[k - 1]) < arg(ps[k])));
  }
}

TEST(SieveRegion, MatchesPointwisePrimality) {
  const Region reg(3.5, 40.0, -1.0, 2.0);
  std::uint64_t direct = 0;
  for (std::int64_t a = -40; a <= 40; ++a) {
    for (std::int64_t b = -40; b <= 40; ++b) {
      if (reg.contains(static_cast<double>(a), static_cast<double>(b)) && is_gaussian_prime({a, b})) ++direct;
    }
  }
  EXPECT_EQ(sieve_region(reg).size(), direct);
  EXPECT_EQ(count_region_primes(reg), direct);
}

TEST(SieveRegion, QuarterSectorsHaveEqualCounts) {
  for (double R : {10.0, 57.5, 200.0}) {
    std::vector<std::size_t> counts;
    for (int k = 0; k < 4; ++k) {
      const double lo = -std::numbers::pi + k * std::numbers::pi / 2;
      counts.push_back(sieve_region(Region(0.0, R, lo, lo + std::numbers::pi / 2)).size());
    }
    EXPECT_EQ(counts[0], counts[1]);
    EXPECT_EQ(counts[1], counts[2]);
    EXPECT_EQ(counts[2], counts[3]);
    EXPECT_EQ(counts[0] * 4, count_region_primes(Region::disk(R)));
  }
}

TEST(SieveRegion, ResourceCap) {
  EXPECT_THROW(sieve_region(Region::disk(100.0), SieveLimits{50.0}), ResourceLimitError);
  EXPECT_THROW(count_region_primes(Region::disk(100.0), SieveLimits{50.0}), ResourceLimitError);
}

TEST(NearestGaussian, Examples) {
  EXPECT_EQ(nearest_gaussian(hp(0.3, 2.6)), (GaussianInt{0, 3}));
  EXPECT_EQ(nearest_gaussian(hp(-1.49, -0.2)), (GaussianInt{-1, 0}));
  EXPECT_THROW(nearest_gaussian(hp(0.5, 0.1)), TieError);
  EXPECT_THROW(nearest_gaussian(hp(1.0, -3.5)), TieError);
}

TEST(SupDist, Examples) {
  EXPECT_NEAR(sup_dist(hp(0.3, 2.6)), 0.4, 1e-15);
  EXPECT_EQ(sup_dist(hp(2.0, 5.0)), 0.0);
  EXPECT_EQ(sup_dist(hp(1.25, -3.5)), 0.5);
}

TEST(NearestGaussian, MinimizesSupDistanceOverNeighbours) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int k = 0; k < 2000; ++k) {
    const ComplexHP z = hp(u(rng), u(rng));
    const GaussianInt g = nearest_gaussian(z);
    auto dist = [&](const GaussianInt& h) {
      const auto d = (z - to_hp(h)).to_complex();
      return std::max(std::abs(d.real()), std::abs(d.imag()));
    };
    ASSERT_NEAR(dist(g), sup_dist(z), 1e-12);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) ASSERT_LE(dist(g), dist(g + GaussianInt{dx, dy}));
    }
  }
}

TEST(EnumerateDisk, Examples) {
  EXPECT_EQ(enumerate_disk(hp(0.1, 0.1), 0.2), (std::vector<GaussianInt>{{0, 0}}));
  const auto four = enumerate_disk(hp(0.5, 0.5), 0.8);
  EXPECT_EQ(std::set<GaussianInt>(four.begin(), four.end()),
            (std::set<GaussianInt>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(enumerate_disk(hp(0.0, 3.0), 0.0), (std::vector<GaussianInt>{{0, 3}}));
  EXPECT_THROW(enumerate_disk(hp(0, 0), -1.0), std::invalid_argument);
}

TEST(EnumerateDisk, SmallRadiusHoldsAtMostTwoPoints) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::uniform_real_distribution<double> r(0.0, std::sqrt(0.5));
  for (int k = 0; k < 5000; ++k) {
    const double rad = r(rng) * (1.0 - 1e-12);
    ASSERT_LE(enumerate_disk(hp(u(rng), u(rng)), rad).size(), 2U);
  }
}

TEST(EnumerateDisk, MatchesBruteForce) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::uniform_real_distribution<double> r(0.0, 4.0);
  for (int k = 0; k < 300; ++k) {
    const double x = u(rng), y = u(rng), rad = r(rng);
    std::vector<GaussianInt> want;
    for (std::int64_t a = -30; a <= 30; ++a) {
      for (std::int64_t b = -30; b <= 30; ++b) {
        if (std::hypot(a - x, b - y) <= rad) want.push_back({a, b});
      }
    }
    ASSERT_EQ(enumerate_disk(hp(x, y), rad), want);
  }
}

TEST(AnnulusLatticeCount, Examples) {
  EXPECT_EQ(annulus_lattice_count(0.0, 2.0), 12U);
  EXPECT_EQ(annulus_lattice_count(0.0, 0.5), 0U);
  EXPECT_EQ(annulus_lattice_count(1.0, 1.0), 0U);
}

TEST(AnnulusLatticeCount, GaussCircleErrorIsLinear) {
  double worst = 0.0;
  for (double x = 1.0; x <= 1000.0; x *= 1.37) {
    const double lo = x / 3.0;
    const double count = static_cast<double>(annulus_lattice_count(lo, x));
    worst = std::max(worst, std::abs(count - std::numbers::pi * (x * x - lo * lo)) / (x + 1.0));
  }
  RecordProperty("gauss_circle_C", std::to_string(worst));
  EXPECT_LE(worst, 10.0);
}

TEST(LatticeFrac, AgreesWithExtendedPrecisionReduction) {
  const ComplexHP w = parse_complex("sqrt2+sqrt3*i", 256);
  const LatticeFrac lf(w);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> d(-(std::int64_t{1} << 45), std::int64_t{1} << 45);
  for (int k = 0; k < 500; ++k) {
    const GaussianInt n = k < 250 ? GaussianInt{d(rng) >> 30, d(rng) >> 30} : GaussianInt{d(rng), d(rng)};
    const ComplexHP exact = to_hp(n, 256) * w;
    const auto r = lf.reduce(n);
    const auto g = nearest_gaussian(exact);
    const auto want = (exact - to_hp(g, 256)).to_complex();
    ASSERT_NEAR(r.real(), want.real(), LatticeFrac::kReductionBudget);
    ASSERT_NEAR(r.imag(), want.imag(), LatticeFrac::kReductionBudget);
    ASSERT_NEAR(lf.sup_dist(n), sup_dist(exact), LatticeFrac::kReductionBudget);
    ASSERT_EQ(lf.nearest(n).first, g);
  }
}

TEST(LatticeFrac, RaisesWhenPrecisionCannotMeetBudget) {
  const LatticeFrac lf(parse_complex("sqrt2+sqrt3*i", 64));
  EXPECT_THROW(lf.reduce({std::int64_t{1} << 60, 0}), PrecisionError);
}

TEST(LatticeFrac, TieIsReported) {
  const LatticeFrac lf(ComplexHP(0.25, 0.0, 128));
  EXPECT_THROW(lf.nearest({2, 0}), TieError);
  EXPECT_EQ(lf.nearest({1, 0}).first, (GaussianInt{0, 0}));
}
