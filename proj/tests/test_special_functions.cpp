#include "vsn/special_functions.hpp"

#include <cmath>
#include <gtest/gtest.h>

#include "vsn/rng.hpp"
#include "test_support.hpp"

namespace {

using vsn::test::bisect;

// Maclaurin series of erf, summed far past double precision. Oracle for the
// frozen point value below.
double erf_series(double x) {
  const double two_over_sqrt_pi = 1.1283791670955126;
  double term = x;
  double sum = x;
  for (int n = 1; n < 60; ++n) {
    term *= -x * x / n;
    sum += term / (2 * n + 1);
  }
  return two_over_sqrt_pi * sum;
}

TEST(Erf, PointValues) {
  EXPECT_EQ(vsn::erf(0.0), 0.0);
  // Oracle-frozen: erf_series(1) = 0.8427007929497149.
  EXPECT_NEAR(vsn::erf(1.0), 0.8427007929497149, 1e-14);
  EXPECT_NEAR(vsn::erf(1.0), erf_series(1.0), 1e-15);
}

TEST(Erf, OddAndMonotone) {
  vsn::SplitMix64 rng(11);
  double prev_x = -6.0, prev_y = vsn::erf(-6.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = -6.0 + 12.0 * rng.next_double();
    EXPECT_DOUBLE_EQ(vsn::erf(-x), -vsn::erf(x));
    if (x > prev_x) {
      EXPECT_GE(vsn::erf(x), prev_y);
    }
    prev_x = x;
    prev_y = vsn::erf(prev_x);
  }
}

TEST(ErfInv, PointValues) {
  EXPECT_EQ(vsn::erf_inv(0.0), 0.0);
  // Oracle-frozen by bisection on erf: erf_inv(0.6008) = 0.5961269796508615.
  EXPECT_NEAR(vsn::erf_inv(0.6008), 0.5961269796508615, 1e-12);
  const double via_bisect =
      bisect([](double x) { return vsn::erf(x) - 0.6008; }, 0.0, 6.0);
  EXPECT_NEAR(vsn::erf_inv(0.6008), via_bisect, 1e-12);
}

TEST(ErfInv, RoundTrip) {
  vsn::SplitMix64 rng(12);
  for (int i = 0; i < 10000; ++i) {
    const double y = -0.999999 + 1.999998 * rng.next_double();
    EXPECT_NEAR(vsn::erf(vsn::erf_inv(y)), y, 1e-10);
  }
}

TEST(ErfInv, DomainErrors) {
  EXPECT_THROW(vsn::erf_inv(1.0), std::domain_error);
  EXPECT_THROW(vsn::erf_inv(-1.0), std::domain_error);
  EXPECT_THROW(vsn::erf_inv(1.5), std::domain_error);
}

TEST(LambertWLower, BranchPoint) {
  const double inv_e = 1.0 / std::exp(1.0);
  EXPECT_NEAR(vsn::lambert_w_lower(-inv_e), -1.0, 1e-9);
}

TEST(LambertWLower, PointValue) {
  // Oracle-frozen by bisection on w e^w over (-50, -1): W_{-1}(-0.2).
  const double frozen = -2.5426413577735265;
  EXPECT_NEAR(vsn::lambert_w_lower(-0.2), frozen, 1e-11);
  const double via_bisect =
      bisect([](double w) { return w * std::exp(w) - (-0.2); }, -50.0, -1.0);
  EXPECT_NEAR(vsn::lambert_w_lower(-0.2), via_bisect, 1e-11);
}

TEST(LambertWLower, DefiningEquationAndBranch) {
  vsn::SplitMix64 rng(13);
  const double inv_e = 1.0 / std::exp(1.0);
  double prev_x = -inv_e, prev_w = -1.0;
  for (int i = 0; i < 10000; ++i) {
    // Cover the whole domain including both hard ends.
    const double u = rng.next_double();
    const double x = -inv_e + inv_e * (u < 0.5 ? u * u : std::sqrt(u) * 0.999999);
    if (!(x < 0.0)) continue;
    const double w = vsn::lambert_w_lower(x);
    EXPECT_LE(w, -1.0);
    EXPECT_NEAR(w * std::exp(w), x, 1e-10 * std::abs(x));
    if (x > prev_x) {
      EXPECT_LE(w, prev_w + 1e-12);  // decreasing branch
    }
    prev_x = x;
    prev_w = w;
  }
}

TEST(LambertWLower, DomainErrors) {
  EXPECT_THROW(vsn::lambert_w_lower(0.0), std::domain_error);
  EXPECT_THROW(vsn::lambert_w_lower(0.5), std::domain_error);
  EXPECT_THROW(vsn::lambert_w_lower(-1.0), std::domain_error);
}

}  // namespace
