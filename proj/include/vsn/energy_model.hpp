#pragma once

#include <iosfwd>
#include <vector>

#include "vsn/core_types.hpp"
#include "vsn/parallel.hpp"
#include "vsn/traffic.hpp"

namespace vsn {

// Expected per-node energy over one activation interval at operating point
// (n, k):
//   total = k a + [(p+j)(d+1) + h d + g] k r - p s/n + (b+p) I(s/n)
// with I the family deficit integral. The family closed forms apply on their
// support; outside it (Uniform with s/n > 2m, Pareto with s/n < v) the exact
// piecewise deficit expressions take over, so optimizer sweeps can cross the
// boundaries. Components: acquisition ka, processing gkr, transmit jkr(d+1),
// relay reception hkrd, idle b I(s/n), buffering p (I(s/n) - s/n + kr(d+1)).
EnergyBreakdown expected_energy(const EnergyRates& rates, const TierConfig& tier,
                                const TrafficModel& traffic, const OperatingPoint& point);

// Independent route to the same total: adaptive quadrature of the buffering
// and idle integrals of the component-form accounting, with tail integrals
// mapped to finite intervals. Used as the oracle for the closed forms.
double expected_energy_quadrature(const EnergyRates& rates, const TierConfig& tier,
                                  const TrafficModel& traffic, const OperatingPoint& point);

// Grid of breakdowns plus the model that produced it, so any cell can be
// checked against a fresh evaluation. Cells are canonical per-interval
// joules; normalization is applied on export.
struct EnergySurface {
  EnergyRates rates;
  TierConfig tier;
  TrafficModel traffic;
  std::vector<double> n_values;
  std::vector<double> k_values;  // frames per interval
  std::vector<EnergyBreakdown> cells;  // row-major: [i * k_values.size() + j]

  const EnergyBreakdown& at(std::size_t n_index, std::size_t k_index) const {
    return cells[n_index * k_values.size() + k_index];
  }
};

// Evaluates expected_energy over the grid; cells are independent, so the
// parallel policy never changes the result.
EnergySurface energy_surface(const EnergyRates& rates, const TierConfig& tier,
                             const TrafficModel& traffic, const std::vector<double>& n_values,
                             const std::vector<double>& k_values, Exec policy = Exec::OpenMp);

// CSV export: one `# normalization=...` comment line, a header, then one row
// per cell. Per-second mode scales energies by 1/T and reports k/T.
void write_surface_csv(std::ostream& out, const EnergySurface& surface, NormalizationMode mode);

}  // namespace vsn
