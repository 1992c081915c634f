#include "vsn/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace vsn {

double erf(double x) { return std::erf(x); }

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Winitzki's approximation, good to ~2e-3 relative; Newton does the rest.
double erf_inv_initial(double y) {
  const double a = 0.147;
  const double l = std::log1p(-y * y);
  const double t = 2.0 / (3.14159265358979323846 * a) + 0.5 * l;
  const double r = std::sqrt(std::sqrt(t * t - l / a) - t);
  return y < 0 ? -r : r;
}

}  // namespace

double erf_inv(double y) {
  if (!(y > -1.0 && y < 1.0)) throw std::domain_error("erf_inv: argument must be in (-1, 1)");
  if (y == 0.0) return 0.0;

  double x = erf_inv_initial(y);
  // Newton on erf(x) - y; derivative 2/sqrt(pi) exp(-x^2).
  for (int it = 0; it < 8; ++it) {
    const double err = std::erf(x) - y;
    const double step = err * (kSqrtPi / 2.0) * std::exp(x * x);
    x -= step;
    if (std::abs(step) <= 1e-16 * std::abs(x)) break;
  }
  return x;
}

double lambert_w_lower(double x) {
  const double inv_e = 1.0 / std::exp(1.0);
  // Tolerate one ulp of slack below -1/e so the exact branch point is usable.
  if (!(x < 0.0) || x < -inv_e * (1.0 + 4e-16)) {
    throw std::domain_error("lambert_w_lower: argument must be in [-1/e, 0)");
  }

  const double q = 1.0 + x * std::exp(1.0);  // >= 0 up to rounding
  if (q <= 0.0) return -1.0;

  double w;
  if (q < 1e-3) {
    // Series around the branch point, p = -sqrt(2(1 + e x)) for the lower branch.
    const double p = -std::sqrt(2.0 * q);
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x > -1e-3) {
    // Asymptotic form for x -> 0^-.
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1 + l2 * (l2 - 2.0) / (2.0 * l1 * l1);
  } else {
    // Mid-range: a crude start is fine, Halley converges in a few steps.
    const double l1 = std::log(-x);
    w = l1 - std::log(-l1);
  }
  if (w > -1.0) w = -1.0 - 1e-12;

  // Halley iteration on f(w) = w e^w - x.
  for (int it = 0; it < 32; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * (w + 1.0));
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 2e-16 * std::abs(w)) break;
  }
  return w <= -1.0 ? w : -1.0;
}

}  // namespace vsn
