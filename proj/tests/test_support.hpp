#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "vsn/core_types.hpp"
#include "vsn/rng.hpp"
#include "vsn/traffic.hpp"

namespace vsn::test {

// Table II hardware rates with the Motion-JPEG multimedia costs composed in.
inline EnergyRates jpeg_rates() {
  return EnergyRates(0.019, 4.40e-8, 2.20e-7, 2.86e-7, 1.90e-7, 2.92e-6);
}

// Same radio rates with the visual-features multimedia costs.
inline EnergyRates visual_feature_rates() {
  return EnergyRates(0.012786, 1.90e-8, 2.20e-7, 2.86e-7, 1.90e-7, 2.92e-6);
}

// 144 kbps receiver over a one-second interval: per-interval == per-second.
inline TierConfig unit_tier(int d) { return TierConfig(144000.0, 1.0, d); }

// The validation-testbed interval.
inline TierConfig table3_tier(int d) { return TierConfig(144000.0 * 154.0, 154.0, d); }

// Synthetic rates with idling dearer than transmitting, which activates the
// gamma branch (Exponential still needs p > b, so p is set above b).
inline EnergyRates gamma_active_rates() {
  return EnergyRates(1e-4, 1e-8, 1e-7, 5e-6, 4e-6, 1e-7);
}

// Bisection root of f on [lo, hi]; requires a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) throw std::runtime_error("bisect: no sign change");
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Central finite difference with relative step.
template <typename F>
double central_diff(const F& f, double x, double rel_step = 1e-6) {
  const double h = rel_step * std::abs(x);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double rel_err(double actual, double expected) {
  return std::abs(actual - expected) / std::abs(expected);
}

}  // namespace vsn::test
