#include "vsn/core_types.hpp"

#include <cmath>

namespace vsn {

namespace {
bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
}  // namespace

EnergyRates::EnergyRates(double a_, double g_, double j_, double p_, double b_, double h_)
    : a(a_), g(g_), j(j_), p(p_), b(b_), h(h_) {
  if (!finite_nonneg(a) || !finite_nonneg(g) || !finite_nonneg(j) || !finite_nonneg(p) ||
      !finite_nonneg(b) || !finite_nonneg(h)) {
    throw validation_error("EnergyRates: all rates must be finite and >= 0");
  }
  if (!(a > 0.0)) throw validation_error("EnergyRates: acquisition cost a must be > 0");
}

TierConfig::TierConfig(double s_bits, double t_seconds, int relay_degree)
    : s(s_bits), t(t_seconds), d(relay_degree) {
  if (!(std::isfinite(s) && s > 0.0)) throw validation_error("TierConfig: s must be > 0");
  if (!(std::isfinite(t) && t > 0.0)) throw validation_error("TierConfig: T must be > 0");
  if (d < 0) throw validation_error("TierConfig: relay degree d must be >= 0");
}

OperatingPoint::OperatingPoint(double n_, double k_) : n(n_), k(k_) {
  if (!(std::isfinite(n) && n > 0.0)) throw validation_error("OperatingPoint: n must be > 0");
  if (!(std::isfinite(k) && k > 0.0)) throw validation_error("OperatingPoint: k must be > 0");
}

CoverageConstraints::CoverageConstraints(double n_min_, double n_max_, double k_min_)
    : n_min(n_min_), n_max(n_max_), k_min(k_min_) {
  if (!(std::isfinite(n_min) && n_min >= 1.0)) {
    throw validation_error("CoverageConstraints: n_min must be >= 1");
  }
  if (!(std::isfinite(n_max) && n_max >= n_min)) {
    throw validation_error("CoverageConstraints: n_max must be >= n_min");
  }
  if (!(std::isfinite(k_min) && k_min > 0.0)) {
    throw validation_error("CoverageConstraints: k_min must be > 0");
  }
}

EnergyBreakdown EnergyBreakdown::from_components(double acquisition, double processing,
                                                 double transmit, double receive_relay,
                                                 double buffering, double idle) {
  EnergyBreakdown e;
  e.acquisition = acquisition;
  e.processing = processing;
  e.transmit = transmit;
  e.receive_relay = receive_relay;
  e.buffering = buffering;
  e.idle = idle;
  e.total = acquisition + processing + transmit + receive_relay + buffering + idle;
  return e;
}

EnergyBreakdown normalize(const EnergyBreakdown& breakdown, const TierConfig& tier,
                          NormalizationMode mode) {
  if (mode == NormalizationMode::PerInterval) return breakdown;
  const double inv_t = 1.0 / tier.t;
  EnergyBreakdown e = breakdown;
  e.acquisition *= inv_t;
  e.processing *= inv_t;
  e.transmit *= inv_t;
  e.receive_relay *= inv_t;
  e.buffering *= inv_t;
  e.idle *= inv_t;
  e.total *= inv_t;
  return e;
}

}  // namespace vsn
