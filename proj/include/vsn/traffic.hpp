#pragma once

#include "vsn/errors.hpp"
#include "vsn/rng.hpp"

namespace vsn {

enum class TrafficFamily { Uniform, Pareto, Exponential, HalfGaussian };

// How the Pareto scale v relates to the operating point:
//   MeanMatched: v = (alpha-1)/alpha * k*r*(d+1), so the aggregate mean is
//                k*r*(d+1) like the other three families.
//   KrScale:     v = k*r*(d+1) (the application-fit parameterization; the
//                distribution mean is then alpha/(alpha-1) * k*r*(d+1)).
enum class ParetoScale { MeanMatched, KrScale };

// Marginal model of the aggregate per-interval bitstream X_{k,d+1}:
// own production of k frames, r bits each on average, plus d relayed streams.
class TrafficModel {
 public:
  static TrafficModel uniform(double r_bits);
  static TrafficModel pareto(double r_bits, double alpha,
                             ParetoScale scale = ParetoScale::MeanMatched);
  static TrafficModel exponential(double r_bits);
  static TrafficModel half_gaussian(double r_bits);

  TrafficFamily family() const { return family_; }
  double r() const { return r_; }
  double alpha() const { return alpha_; }
  ParetoScale pareto_scale() const { return scale_; }

 private:
  TrafficModel(TrafficFamily family, double r, double alpha, ParetoScale scale);

  TrafficFamily family_;
  double r_;
  double alpha_;  // meaningful for Pareto only
  ParetoScale scale_;
};

// Nominal aggregate mean k*r*(d+1): it is the linear-term data volume of the
// energy model for every family, and the true distribution mean for all
// mean-matched models.
double aggregate_mean(const TrafficModel& model, double k, int d);

// Pareto scale v for the aggregate distribution (Pareto only).
double pareto_scale_value(const TrafficModel& model, double k, int d);

// True mean of the aggregate distribution; differs from aggregate_mean only
// for KrScale Pareto.
double distribution_mean(const TrafficModel& model, double k, int d);

// Density of X_{k,d+1} at x (per bit); zero outside the support.
double density(const TrafficModel& model, double k, int d, double x);

// Distribution function of X_{k,d+1}.
double cdf(const TrafficModel& model, double k, int d, double x);

// Inverse CDF for u in [0, 1).
double quantile(const TrafficModel& model, double k, int d, double u);

// Deficit integral I(c) = integral_0^c (c - x) P_{d+1}(x) dx: the expected
// unused capacity when the per-node capacity is c bits. Continuous,
// non-decreasing, 1-Lipschitz, with 0 <= I(c) <= max(0, c).
double deficit_integral(const TrafficModel& model, double k, int d, double c);

// Overflow integral E[(X - c)^+] = I(c) - c + E[X]; always >= 0.
double overflow_integral(const TrafficModel& model, double k, int d, double c);

enum class SamplerKind { InverseCdf, Rejection };

// One draw of X_{k,d+1} from the given stream. Inverse-CDF consumes exactly
// one uniform; rejection mode consumes a variable number, so callers must
// give each logical draw sequence its own stream.
double sample(const TrafficModel& model, double k, int d, SplitMix64& rng,
              SamplerKind kind = SamplerKind::InverseCdf);

}  // namespace vsn
