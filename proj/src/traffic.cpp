#include "vsn/traffic.hpp"

#include <cmath>

#include "vsn/special_functions.hpp"

namespace vsn {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

void require_positive_args(double k, int d) {
  if (!(k > 0.0)) throw validation_error("traffic: k must be > 0");
  if (d < 0) throw validation_error("traffic: d must be >= 0");
}
}  // namespace

TrafficModel::TrafficModel(TrafficFamily family, double r, double alpha, ParetoScale scale)
    : family_(family), r_(r), alpha_(alpha), scale_(scale) {
  if (!(std::isfinite(r) && r > 0.0)) throw validation_error("TrafficModel: r must be > 0");
  if (family == TrafficFamily::Pareto && !(std::isfinite(alpha) && alpha > 1.0)) {
    throw validation_error("TrafficModel: Pareto shape alpha must be > 1");
  }
}

TrafficModel TrafficModel::uniform(double r_bits) {
  return TrafficModel(TrafficFamily::Uniform, r_bits, 0.0, ParetoScale::MeanMatched);
}
TrafficModel TrafficModel::pareto(double r_bits, double alpha, ParetoScale scale) {
  return TrafficModel(TrafficFamily::Pareto, r_bits, alpha, scale);
}
TrafficModel TrafficModel::exponential(double r_bits) {
  return TrafficModel(TrafficFamily::Exponential, r_bits, 0.0, ParetoScale::MeanMatched);
}
TrafficModel TrafficModel::half_gaussian(double r_bits) {
  return TrafficModel(TrafficFamily::HalfGaussian, r_bits, 0.0, ParetoScale::MeanMatched);
}

double aggregate_mean(const TrafficModel& model, double k, int d) {
  require_positive_args(k, d);
  return k * model.r() * (d + 1);
}

double pareto_scale_value(const TrafficModel& model, double k, int d) {
  if (model.family() != TrafficFamily::Pareto) {
    throw validation_error("pareto_scale_value: model is not Pareto");
  }
  const double m = aggregate_mean(model, k, d);
  return model.pareto_scale() == ParetoScale::MeanMatched
             ? (model.alpha() - 1.0) / model.alpha() * m
             : m;
}

double distribution_mean(const TrafficModel& model, double k, int d) {
  const double m = aggregate_mean(model, k, d);
  if (model.family() == TrafficFamily::Pareto && model.pareto_scale() == ParetoScale::KrScale) {
    return model.alpha() / (model.alpha() - 1.0) * m;
  }
  return m;
}

double density(const TrafficModel& model, double k, int d, double x) {
  const double m = aggregate_mean(model, k, d);
  switch (model.family()) {
    case TrafficFamily::Uniform:
      return (x >= 0.0 && x <= 2.0 * m) ? 1.0 / (2.0 * m) : 0.0;
    case TrafficFamily::Pareto: {
      const double v = pareto_scale_value(model, k, d);
      const double alpha = model.alpha();
      return x >= v ? alpha / x * std::pow(v / x, alpha) : 0.0;
    }
    case TrafficFamily::Exponential:
      return x >= 0.0 ? std::exp(-x / m) / m : 0.0;
    case TrafficFamily::HalfGaussian:
      return x >= 0.0 ? 2.0 / (kPi * m) * std::exp(-x * x / (kPi * m * m)) : 0.0;
  }
  return 0.0;
}

double cdf(const TrafficModel& model, double k, int d, double x) {
  const double m = aggregate_mean(model, k, d);
  switch (model.family()) {
    case TrafficFamily::Uniform: {
      if (x <= 0.0) return 0.0;
      if (x >= 2.0 * m) return 1.0;
      return x / (2.0 * m);
    }
    case TrafficFamily::Pareto: {
      const double v = pareto_scale_value(model, k, d);
      if (x <= v) return 0.0;
      return 1.0 - std::pow(v / x, model.alpha());
    }
    case TrafficFamily::Exponential:
      return x <= 0.0 ? 0.0 : -std::expm1(-x / m);
    case TrafficFamily::HalfGaussian:
      return x <= 0.0 ? 0.0 : vsn::erf(x / (kSqrtPi * m));
  }
  return 0.0;
}

double quantile(const TrafficModel& model, double k, int d, double u) {
  if (!(u >= 0.0 && u < 1.0)) throw validation_error("quantile: u must be in [0, 1)");
  const double m = aggregate_mean(model, k, d);
  switch (model.family()) {
    case TrafficFamily::Uniform:
      return 2.0 * m * u;
    case TrafficFamily::Pareto: {
      const double v = pareto_scale_value(model, k, d);
      return v * std::pow(1.0 - u, -1.0 / model.alpha());
    }
    case TrafficFamily::Exponential:
      return -m * std::log1p(-u);
    case TrafficFamily::HalfGaussian:
      return kSqrtPi * m * erf_inv(u);
  }
  return 0.0;
}

double deficit_integral(const TrafficModel& model, double k, int d, double c) {
  require_positive_args(k, d);
  if (!(c >= 0.0)) throw validation_error("deficit_integral: c must be >= 0");
  if (c == 0.0) return 0.0;
  const double m = aggregate_mean(model, k, d);
  switch (model.family()) {
    case TrafficFamily::Uniform:
      return c <= 2.0 * m ? c * c / (4.0 * m) : c - m;
    case TrafficFamily::Pareto: {
      const double v = pareto_scale_value(model, k, d);
      const double alpha = model.alpha();
      if (c <= v) return 0.0;
      // c - alpha v/(alpha-1) + v^alpha c^{1-alpha}/(alpha-1), with the power
      // term written as v (v/c)^{alpha-1} so huge v cannot overflow.
      return c - alpha * v / (alpha - 1.0) + v * std::pow(v / c, alpha - 1.0) / (alpha - 1.0);
    }
    case TrafficFamily::Exponential:
      // c - m + m e^{-c/m}, written with expm1 to survive c << m.
      return c + m * std::expm1(-c / m);
    case TrafficFamily::HalfGaussian:
      return m * std::expm1(-c * c / (kPi * m * m)) + c * vsn::erf(c / (kSqrtPi * m));
  }
  return 0.0;
}

double overflow_integral(const TrafficModel& model, double k, int d, double c) {
  const double value = deficit_integral(model, k, d, c) - c + distribution_mean(model, k, d);
  return value > 0.0 ? value : 0.0;
}

namespace {

double sample_rejection(const TrafficModel& model, double k, int d, SplitMix64& rng) {
  const double m = aggregate_mean(model, k, d);
  switch (model.family()) {
    case TrafficFamily::Uniform: {
      // Flat density: the box proposal is exact, the accept test never fails.
      for (;;) {
        const double y = 2.0 * m * rng.next_double();
        const double z = rng.next_double() / (2.0 * m);
        if (z <= density(model, k, d, y)) return y;
      }
    }
    case TrafficFamily::Pareto: {
      // Ratio-of-uniforms: u <= sqrt(f(w/u)) with u in (0, sqrt(f(v))],
      // w in (0, v*sqrt(f(v))] (x sqrt(f(x)) is maximal at the scale v).
      const double v = pareto_scale_value(model, k, d);
      const double alpha = model.alpha();
      const double u_max = std::sqrt(alpha / v);
      const double w_max = std::sqrt(alpha * v);
      for (;;) {
        const double u = u_max * rng.next_double();
        const double w = w_max * rng.next_double();
        if (u <= 0.0) continue;
        const double x = w / u;
        if (u * u <= density(model, k, d, x)) return x;
      }
    }
    case TrafficFamily::Exponential: {
      // Ratio-of-uniforms with u_max = sqrt(1/m), w_max = 2 sqrt(m)/e.
      const double u_max = std::sqrt(1.0 / m);
      const double w_max = 2.0 * std::sqrt(m) / std::exp(1.0);
      for (;;) {
        const double u = u_max * rng.next_double();
        const double w = w_max * rng.next_double();
        if (u <= 0.0) continue;
        const double x = w / u;
        if (u * u <= density(model, k, d, x)) return x;
      }
    }
    case TrafficFamily::HalfGaussian: {
      // Envelope: exponential with the same mean; sup f_H/f_E = (2/pi) e^{pi/4}.
      const double big_m = 2.0 / kPi * std::exp(kPi / 4.0);
      for (;;) {
        const double y = -m * std::log1p(-rng.next_double());
        const double envelope = big_m * std::exp(-y / m) / m;
        if (rng.next_double() * envelope <= density(model, k, d, y)) return y;
      }
    }
  }
  return 0.0;
}

}  // namespace

double sample(const TrafficModel& model, double k, int d, SplitMix64& rng, SamplerKind kind) {
  if (kind == SamplerKind::Rejection) return sample_rejection(model, k, d, rng);
  return quantile(model, k, d, rng.next_double());
}

}  // namespace vsn
