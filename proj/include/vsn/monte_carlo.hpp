#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "vsn/core_types.hpp"
#include "vsn/parallel.hpp"
#include "vsn/traffic.hpp"

namespace vsn {

// How the aggregate stream of one interval is produced:
//   Marginal:      x_agg is an independent draw from P_{d+1} (the model's
//                  assumption, and the validation protocol's preloaded sets).
//   Compositional: x_agg = x_own + sum of d independent per-node draws,
//                  which quantifies the cost of the aggregate assumption.
enum class CouplingMode { Marginal, Compositional };

const char* coupling_mode_name(CouplingMode mode);

struct IntervalDraws {
  double x_own = 0.0;  // bits produced by this node
  double x_rel = 0.0;  // bits received from the d relayed nodes
  double x_agg = 0.0;  // bits competing for the node's slot capacity
};

// Direct energy accounting for one interval given the drawn sizes:
// k a + (g+j) x_own + (h+j) x_rel + p max(0, x_agg - s/n) + b max(0, s/n - x_agg),
// split into the same six components as the analytic breakdown.
EnergyBreakdown interval_energy(const EnergyRates& rates, const TierConfig& tier, double n,
                                std::int64_t k_frames, const IntervalDraws& draws);

IntervalDraws draw_interval(const TrafficModel& traffic, int d, std::int64_t k_frames,
                            SplitMix64& rng, CouplingMode mode,
                            SamplerKind sampler = SamplerKind::InverseCdf);

EnergyBreakdown simulate_interval(const EnergyRates& rates, const TierConfig& tier,
                                  const TrafficModel& traffic, double n, std::int64_t k_frames,
                                  SplitMix64& rng, CouplingMode mode,
                                  SamplerKind sampler = SamplerKind::InverseCdf);

struct CellStats {
  double mean = 0.0;           // J per interval
  double sd = 0.0;
  double ci99_half_width = 0.0;
  std::int64_t intervals = 0;
};

// Replications are independent; each one owns the stream derived from
// (seed, cell_i, cell_j, t), and the reduction is a fixed-order pairwise
// sum, so the statistics are bit-identical for any policy or thread count.
CellStats run_monte_carlo(const EnergyRates& rates, const TierConfig& tier,
                          const TrafficModel& traffic, double n, std::int64_t k_frames,
                          std::int64_t intervals, std::uint64_t seed, CouplingMode mode,
                          Exec policy = Exec::OpenMp, std::uint64_t cell_i = 0,
                          std::uint64_t cell_j = 0,
                          SamplerKind sampler = SamplerKind::InverseCdf);

struct SimulationCell {
  double n = 0.0;
  double k_per_second = 0.0;
  std::int64_t k_frames = 0;
  double analytic = 0.0;  // J per interval
  double sim_mean = 0.0;
  double sim_sd = 0.0;
  double err_pct = 0.0;
  std::int64_t intervals = 0;
};

struct SimulationReport {
  std::uint64_t seed = 0;
  CouplingMode mode = CouplingMode::Marginal;
  std::int64_t intervals = 0;
  std::vector<SimulationCell> cells;
  double mean_abs_err_pct = 0.0;
  double max_err_pct = 0.0;
  std::optional<double> r_squared;  // absent when SS_tot = 0 (single cell)
};

// The validation protocol: per-(n,k) comparison of simulated mean energy
// against the analytic model over a grid, with aggregate error metrics and
// the coefficient of determination over cell means. k axis is per-second;
// each cell simulates round(k * T) whole frames.
SimulationReport validate_surface(const EnergyRates& rates, const TierConfig& tier,
                                  const TrafficModel& traffic,
                                  const std::vector<double>& n_values,
                                  const std::vector<double>& k_per_second_values,
                                  std::int64_t intervals, std::uint64_t seed, CouplingMode mode,
                                  Exec policy = Exec::OpenMp,
                                  SamplerKind sampler = SamplerKind::InverseCdf);

// CSV rows `n,k,analytic_J,sim_mean_J,sim_sd_J,err_pct` (k per second; J per
// the chosen normalization), preceded by comment lines recording seed/mode.
void write_report_csv(std::ostream& out, const SimulationReport& report, const TierConfig& tier,
                      NormalizationMode norm);

}  // namespace vsn
