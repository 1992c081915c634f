#include "vsn/monte_carlo.hpp"

#include <cmath>
#include <ostream>

#include "vsn/energy_model.hpp"
#include "vsn/fitting.hpp"

namespace vsn {

const char* coupling_mode_name(CouplingMode mode) {
  return mode == CouplingMode::Marginal ? "marginal" : "compositional";
}

EnergyBreakdown interval_energy(const EnergyRates& rates, const TierConfig& tier, double n,
                                std::int64_t k_frames, const IntervalDraws& draws) {
  const double c = tier.s / n;
  const double overflow = std::max(0.0, draws.x_agg - c);
  const double shortfall = std::max(0.0, c - draws.x_agg);
  return EnergyBreakdown::from_components(
      /*acquisition=*/static_cast<double>(k_frames) * rates.a,
      /*processing=*/rates.g * draws.x_own,
      /*transmit=*/rates.j * (draws.x_own + draws.x_rel),
      /*receive_relay=*/rates.h * draws.x_rel,
      /*buffering=*/rates.p * overflow,
      /*idle=*/rates.b * shortfall);
}

IntervalDraws draw_interval(const TrafficModel& traffic, int d, std::int64_t k_frames,
                            SplitMix64& rng, CouplingMode mode, SamplerKind sampler) {
  const double k = static_cast<double>(k_frames);
  IntervalDraws draws;
  draws.x_own = sample(traffic, k, 0, rng, sampler);
  if (mode == CouplingMode::Marginal) {
    if (d > 0) draws.x_rel = sample(traffic, k, d - 1, rng, sampler);
    draws.x_agg = sample(traffic, k, d, rng, sampler);
  } else {
    for (int i = 0; i < d; ++i) draws.x_rel += sample(traffic, k, 0, rng, sampler);
    draws.x_agg = draws.x_own + draws.x_rel;
  }
  return draws;
}

EnergyBreakdown simulate_interval(const EnergyRates& rates, const TierConfig& tier,
                                  const TrafficModel& traffic, double n, std::int64_t k_frames,
                                  SplitMix64& rng, CouplingMode mode, SamplerKind sampler) {
  if (k_frames < 1 || !(n >= 1.0)) {
    throw validation_error("simulate_interval: requires integer k >= 1 and n >= 1");
  }
  const IntervalDraws draws = draw_interval(traffic, tier.d, k_frames, rng, mode, sampler);
  return interval_energy(rates, tier, n, k_frames, draws);
}

CellStats run_monte_carlo(const EnergyRates& rates, const TierConfig& tier,
                          const TrafficModel& traffic, double n, std::int64_t k_frames,
                          std::int64_t intervals, std::uint64_t seed, CouplingMode mode,
                          Exec policy, std::uint64_t cell_i, std::uint64_t cell_j,
                          SamplerKind sampler) {
  if (intervals < 1) throw validation_error("run_monte_carlo: intervals must be >= 1");

  std::vector<double> totals(static_cast<std::size_t>(intervals));
  for_each_index(policy, intervals, [&](std::int64_t t) {
    SplitMix64 stream = derive_stream(seed, cell_i, cell_j, static_cast<std::uint64_t>(t));
    totals[static_cast<std::size_t>(t)] =
        simulate_interval(rates, tier, traffic, n, k_frames, stream, mode, sampler).total;
  });

  CellStats stats;
  stats.intervals = intervals;
  stats.mean = pairwise_sum(totals) / static_cast<double>(intervals);
  if (intervals > 1) {
    std::vector<double> sq(totals.size());
    for (std::size_t i = 0; i < totals.size(); ++i) {
      const double dev = totals[i] - stats.mean;
      sq[i] = dev * dev;
    }
    stats.sd = std::sqrt(pairwise_sum(sq) / static_cast<double>(intervals - 1));
    stats.ci99_half_width = 2.5758293035489004 * stats.sd / std::sqrt(static_cast<double>(intervals));
  }
  return stats;
}

SimulationReport validate_surface(const EnergyRates& rates, const TierConfig& tier,
                                  const TrafficModel& traffic,
                                  const std::vector<double>& n_values,
                                  const std::vector<double>& k_per_second_values,
                                  std::int64_t intervals, std::uint64_t seed, CouplingMode mode,
                                  Exec policy, SamplerKind sampler) {
  if (n_values.empty() || k_per_second_values.empty()) {
    throw validation_error("validate_surface: grid must be non-empty");
  }

  SimulationReport report;
  report.seed = seed;
  report.mode = mode;
  report.intervals = intervals;

  for (std::size_t i = 0; i < n_values.size(); ++i) {
    for (std::size_t j = 0; j < k_per_second_values.size(); ++j) {
      const double k_ps = k_per_second_values[j];
      const std::int64_t k_frames =
          std::max<std::int64_t>(1, static_cast<std::int64_t>(std::llround(k_ps * tier.t)));
      SimulationCell cell;
      cell.n = n_values[i];
      cell.k_per_second = k_ps;
      cell.k_frames = k_frames;
      cell.intervals = intervals;
      cell.analytic = expected_energy(rates, tier, traffic,
                                      OperatingPoint(cell.n, static_cast<double>(k_frames)))
                          .total;
      const CellStats stats =
          run_monte_carlo(rates, tier, traffic, cell.n, k_frames, intervals, seed, mode, policy,
                          static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j), sampler);
      cell.sim_mean = stats.mean;
      cell.sim_sd = stats.sd;
      cell.err_pct = 100.0 * std::abs(cell.sim_mean - cell.analytic) / cell.analytic;
      report.cells.push_back(cell);
    }
  }

  double err_sum = 0.0;
  report.max_err_pct = 0.0;
  std::vector<double> observed, predicted;
  observed.reserve(report.cells.size());
  predicted.reserve(report.cells.size());
  for (const SimulationCell& cell : report.cells) {
    err_sum += cell.err_pct;
    report.max_err_pct = std::max(report.max_err_pct, cell.err_pct);
    observed.push_back(cell.sim_mean);
    predicted.push_back(cell.analytic);
  }
  report.mean_abs_err_pct = err_sum / static_cast<double>(report.cells.size());
  report.r_squared = report.cells.size() >= 2
                         ? r_squared(observed, predicted)
                         : std::nullopt;
  return report;
}

void write_report_csv(std::ostream& out, const SimulationReport& report, const TierConfig& tier,
                      NormalizationMode norm) {
  const double scale = norm == NormalizationMode::PerSecond ? 1.0 / tier.t : 1.0;
  out << "# seed=" << report.seed << " mode=" << coupling_mode_name(report.mode)
      << " intervals=" << report.intervals << '\n';
  out << "# normalization="
      << (norm == NormalizationMode::PerSecond ? "per-second" : "per-interval") << '\n';
  out << "n,k,analytic_J,sim_mean_J,sim_sd_J,err_pct\n";
  out.precision(12);
  for (const SimulationCell& cell : report.cells) {
    out << cell.n << ',' << cell.k_per_second << ',' << cell.analytic * scale << ','
        << cell.sim_mean * scale << ',' << cell.sim_sd * scale << ',' << cell.err_pct << '\n';
  }
}

}  // namespace vsn
