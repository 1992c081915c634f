#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vsn/core_types.hpp"
#include "vsn/traffic.hpp"

namespace vsn {

// Per-frame mean from empirical per-interval aggregate sizes:
// sample_mean / (k (d+1)).
double fit_mean(std::span<const double> sizes_bits, double k_frames, int d);

// 1 - SS_res/SS_tot; nullopt when the observations are constant (SS_tot = 0).
// Throws validation_error on length mismatch or fewer than 2 points.
std::optional<double> r_squared(std::span<const double> observed,
                                std::span<const double> predicted);

// One-sample Kolmogorov-Smirnov distance between empirical sizes and the
// aggregate CDF of a candidate model; auxiliary diagnostic only, model
// selection goes through the energy surface.
double ks_statistic(std::span<const double> sizes_bits, const TrafficModel& model,
                    double k_frames, int d);

struct SurfaceSample {
  double n = 0.0;
  double k = 0.0;  // frames per interval
  double joules = 0.0;  // per interval
};

struct CandidateScore {
  TrafficModel model;
  std::string label;
  std::optional<double> r2;
};

struct FitResult {
  double r_hat = 0.0;                    // bits per frame
  std::vector<CandidateScore> ranking;   // descending R^2, absent last
  const CandidateScore& best() const { return ranking.front(); }
};

// Default candidate set: Uniform, Pareto (both v modes), Exponential,
// Half-Gaussian, all with mean r_hat. alpha is a user input, not estimated.
std::vector<CandidateScore> default_candidates(double r_hat, double alpha);

// Ranks candidate models by R^2 of their analytic energy surface against
// measured (n, k, J) triples. Requires at least 3 reference points.
FitResult select_family(std::span<const SurfaceSample> reference, const EnergyRates& rates,
                        const TierConfig& tier, std::vector<CandidateScore> candidates,
                        double r_hat);

}  // namespace vsn
