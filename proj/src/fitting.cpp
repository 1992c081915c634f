#include "vsn/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vsn/energy_model.hpp"
#include "vsn/parallel.hpp"

namespace vsn {

double fit_mean(std::span<const double> sizes_bits, double k_frames, int d) {
  if (sizes_bits.empty()) throw validation_error("fit_mean: empty size list");
  if (!(k_frames >= 1.0)) throw validation_error("fit_mean: k must be >= 1");
  if (d < 0) throw validation_error("fit_mean: d must be >= 0");
  for (double s : sizes_bits) {
    if (!(s >= 0.0)) throw validation_error("fit_mean: sizes must be >= 0");
  }
  // Summing in sorted order makes the estimate exactly permutation-invariant.
  std::vector<double> sorted(sizes_bits.begin(), sizes_bits.end());
  std::sort(sorted.begin(), sorted.end());
  const double sum = pairwise_sum(sorted);
  return sum / (static_cast<double>(sizes_bits.size()) * k_frames * (d + 1));
}

std::optional<double> r_squared(std::span<const double> observed,
                                std::span<const double> predicted) {
  if (observed.size() != predicted.size()) {
    throw validation_error("r_squared: length mismatch");
  }
  if (observed.size() < 2) throw validation_error("r_squared: needs at least 2 points");
  double mean = 0.0;
  for (double o : observed) mean += o;
  mean /= static_cast<double>(observed.size());
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    ss_res += (observed[i] - predicted[i]) * (observed[i] - predicted[i]);
    ss_tot += (observed[i] - mean) * (observed[i] - mean);
  }
  if (ss_tot == 0.0) return std::nullopt;
  return 1.0 - ss_res / ss_tot;
}

double ks_statistic(std::span<const double> sizes_bits, const TrafficModel& model,
                    double k_frames, int d) {
  if (sizes_bits.empty()) throw validation_error("ks_statistic: empty size list");
  std::vector<double> sorted(sizes_bits.begin(), sizes_bits.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double dmax = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(model, k_frames, d, sorted[i]);
    dmax = std::max(dmax, std::abs(f - static_cast<double>(i) / n));
    dmax = std::max(dmax, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return dmax;
}

std::vector<CandidateScore> default_candidates(double r_hat, double alpha) {
  return {
      {TrafficModel::uniform(r_hat), "uniform", std::nullopt},
      {TrafficModel::pareto(r_hat, alpha, ParetoScale::MeanMatched), "pareto-mean-matched",
       std::nullopt},
      {TrafficModel::pareto(r_hat, alpha, ParetoScale::KrScale), "pareto-kr", std::nullopt},
      {TrafficModel::exponential(r_hat), "exponential", std::nullopt},
      {TrafficModel::half_gaussian(r_hat), "half-gaussian", std::nullopt},
  };
}

FitResult select_family(std::span<const SurfaceSample> reference, const EnergyRates& rates,
                        const TierConfig& tier, std::vector<CandidateScore> candidates,
                        double r_hat) {
  if (reference.size() < 3) {
    throw validation_error("select_family: needs at least 3 reference points");
  }
  if (candidates.empty()) throw validation_error("select_family: empty candidate list");

  std::vector<double> observed;
  observed.reserve(reference.size());
  for (const SurfaceSample& s : reference) observed.push_back(s.joules);

  for (CandidateScore& cand : candidates) {
    std::vector<double> predicted;
    predicted.reserve(reference.size());
    for (const SurfaceSample& s : reference) {
      predicted.push_back(
          expected_energy(rates, tier, cand.model, OperatingPoint(s.n, s.k)).total);
    }
    cand.r2 = r_squared(observed, predicted);
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const CandidateScore& lhs, const CandidateScore& rhs) {
                     if (lhs.r2.has_value() != rhs.r2.has_value()) return lhs.r2.has_value();
                     if (!lhs.r2) return false;
                     return *lhs.r2 > *rhs.r2;
                   });

  FitResult result;
  result.r_hat = r_hat;
  result.ranking = std::move(candidates);
  return result;
}

}  // namespace vsn
