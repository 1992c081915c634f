#pragma once

#include "vsn/errors.hpp"

namespace vsn {

// Canonical internal units everywhere: bits, joules, seconds, and
// frames-per-interval. Per-second values exist only at I/O boundaries.

// The six per-bit / per-frame energy rates of one node.
struct EnergyRates {
  double a;  // J per frame: acquisition + processing initialization
  double g;  // J per produced bit
  double j;  // J per transmitted bit
  double p;  // J per buffered bit (overflow penalty)
  double b;  // J per idle bit-interval (beaconing)
  double h;  // J per received-and-relayed bit

  EnergyRates(double a_, double g_, double j_, double p_, double b_, double h_);
};

struct TierConfig {
  double s;        // bits consumed by the receiver per activation interval
  double t;        // seconds per activation interval
  int d;           // relay degree: additional lower-tier nodes relayed

  TierConfig(double s_bits, double t_seconds, int relay_degree);
};

// Decision variables. Positive reals during analysis; the optimizer's
// discretization step is the only place integrality is imposed.
struct OperatingPoint {
  double n;  // nodes in the tier
  double k;  // frames per interval

  OperatingPoint(double n_, double k_);
};

struct CoverageConstraints {
  double n_min;
  double n_max;
  double k_min;  // frames per interval

  CoverageConstraints(double n_min_, double n_max_, double k_min_);
};

struct EnergyBreakdown {
  double acquisition = 0;
  double processing = 0;
  double transmit = 0;
  double receive_relay = 0;
  double buffering = 0;
  double idle = 0;
  double total = 0;

  // total is always the exact sum of the six components.
  static EnergyBreakdown from_components(double acquisition, double processing, double transmit,
                                         double receive_relay, double buffering, double idle);
};

enum class NormalizationMode { PerInterval, PerSecond };

// Per-second mode divides every component by tier.t; per-interval is the
// identity. Round-tripping is exact up to one rounding each way.
EnergyBreakdown normalize(const EnergyBreakdown& breakdown, const TierConfig& tier,
                          NormalizationMode mode);

}  // namespace vsn
