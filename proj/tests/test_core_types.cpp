#include "vsn/core_types.hpp"

#include <gtest/gtest.h>

#include "vsn/rng.hpp"
#include "test_support.hpp"

namespace {

using vsn::CoverageConstraints;
using vsn::EnergyBreakdown;
using vsn::EnergyRates;
using vsn::NormalizationMode;
using vsn::OperatingPoint;
using vsn::TierConfig;
using vsn::validation_error;

TEST(EnergyRatesType, RejectsInvalid) {
  EXPECT_THROW(EnergyRates(0.0, 1e-8, 1e-7, 1e-7, 1e-7, 1e-6), validation_error);  // a == 0
  EXPECT_THROW(EnergyRates(-0.1, 1e-8, 1e-7, 1e-7, 1e-7, 1e-6), validation_error);
  EXPECT_THROW(EnergyRates(0.01, -1e-8, 1e-7, 1e-7, 1e-7, 1e-6), validation_error);
  EXPECT_THROW(EnergyRates(0.01, 1e-8, 1e-7, 1e-7, 1e-7, -1e-6), validation_error);
  EXPECT_NO_THROW(EnergyRates(0.01, 0.0, 0.0, 0.0, 0.0, 0.0));  // zero rates are legal
}

TEST(TierConfigType, RejectsInvalid) {
  EXPECT_THROW(TierConfig(0.0, 1.0, 0), validation_error);
  EXPECT_THROW(TierConfig(1000.0, 0.0, 0), validation_error);
  EXPECT_THROW(TierConfig(1000.0, 1.0, -1), validation_error);
  EXPECT_NO_THROW(TierConfig(144000.0, 154.0, 2));
}

TEST(OperatingPointType, RejectsInvalid) {
  EXPECT_THROW(OperatingPoint(0.0, 1.0), validation_error);
  EXPECT_THROW(OperatingPoint(1.0, -2.0), validation_error);
}

TEST(CoverageConstraintsType, RejectsInvalid) {
  EXPECT_THROW(CoverageConstraints(0.5, 4.0, 1.0), validation_error);   // n_min < 1
  EXPECT_THROW(CoverageConstraints(5.0, 4.0, 1.0), validation_error);   // n_min > n_max
  EXPECT_THROW(CoverageConstraints(2.0, 4.0, 0.0), validation_error);   // k_min == 0
  EXPECT_NO_THROW(CoverageConstraints(2.0, 16.0, 308.0));
}

TEST(Breakdown, TotalIsComponentSum) {
  const EnergyBreakdown e = EnergyBreakdown::from_components(1.0, 0.25, 0.5, 0.125, 0.0625, 2.0);
  EXPECT_DOUBLE_EQ(e.total,
                   e.acquisition + e.processing + e.transmit + e.receive_relay + e.buffering +
                       e.idle);
}

TEST(Normalize, PerSecondDividesByT) {
  const TierConfig tier(144000.0 * 154.0, 154.0, 0);
  const EnergyBreakdown e = EnergyBreakdown::from_components(10.0, 0, 0, 0, 0, 0);
  const EnergyBreakdown per_second = normalize(e, tier, NormalizationMode::PerSecond);
  EXPECT_NEAR(per_second.total, 0.06493506493506493, 1e-15);
}

TEST(Normalize, PerIntervalIsIdentity) {
  const TierConfig tier(144000.0, 17.0, 1);
  const EnergyBreakdown e = EnergyBreakdown::from_components(0.1, 0.2, 0.3, 0.4, 0.5, 0.6);
  const EnergyBreakdown same = normalize(e, tier, NormalizationMode::PerInterval);
  EXPECT_EQ(same.total, e.total);
  EXPECT_EQ(same.idle, e.idle);
}

TEST(Normalize, RoundTripIdentity) {
  // 0.017 J/s over a 154 s interval is 2.618 J; scaling back must round-trip.
  const TierConfig tier(144000.0 * 154.0, 154.0, 0);
  const EnergyBreakdown interval_e = EnergyBreakdown::from_components(2.618, 0, 0, 0, 0, 0);
  EXPECT_NEAR(normalize(interval_e, tier, NormalizationMode::PerSecond).total, 0.017, 1e-12);

  vsn::SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const EnergyBreakdown e = EnergyBreakdown::from_components(
        rng.next_double(), rng.next_double(), rng.next_double(), rng.next_double(),
        rng.next_double(), rng.next_double());
    const EnergyBreakdown ps = normalize(e, tier, NormalizationMode::PerSecond);
    const EnergyBreakdown back = EnergyBreakdown::from_components(
        ps.acquisition * tier.t, ps.processing * tier.t, ps.transmit * tier.t,
        ps.receive_relay * tier.t, ps.buffering * tier.t, ps.idle * tier.t);
    EXPECT_NEAR(back.total, e.total, 1e-12 * e.total);
    EXPECT_NEAR(back.buffering, e.buffering, 1e-12 * (e.buffering + 1e-300));
  }
}

}  // namespace
