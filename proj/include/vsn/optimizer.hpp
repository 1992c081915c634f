#pragma once

#include <optional>

#include "vsn/core_types.hpp"
#include "vsn/energy_model.hpp"
#include "vsn/parallel.hpp"
#include "vsn/traffic.hpp"

namespace vsn {

// Which case of the piecewise constrained optimum is active, ordered by the
// position of K_min relative to gamma/N_max, beta/N_max and beta/N_min.
enum class Branch { GammaInterior, MaxMin, BetaInterior, MinMin };

const char* branch_name(Branch branch);

// The published Exponential beta uses ln((b+p)/p); the first-order condition
// and the experiment tables require ln((b+p)/b). Corrected is the default,
// the printed form stays available for comparison.
enum class BetaEVariant { Corrected, PaperLiteral };

// Family constant beta: n = beta/k is the root of dE/dn = 0 at fixed k.
// Exponential requires p > b.
double beta(const EnergyRates& rates, const TierConfig& tier, const TrafficModel& traffic,
            BetaEVariant variant = BetaEVariant::Corrected);

// Family constant gamma: k = gamma/n is the root of dE/dk = 0 at fixed n.
// Always defined for Uniform; for Pareto and Exponential only when idling
// costs more than transmitting (b > j + a/(r(d+1)) + (hd+g)/(d+1)), which is
// the condition for the k-direction critical point to be positive. Returns
// nullopt when the branch is infeasible. Not defined for Half-Gaussian.
std::optional<double> gamma(const EnergyRates& rates, const TierConfig& tier,
                            const TrafficModel& traffic);

struct OptimumResult {
  double beta = 0.0;
  std::optional<double> gamma;
  Branch branch = Branch::MinMin;
  OperatingPoint continuous{1.0, 1.0};
  OperatingPoint discrete{1.0, 1.0};  // integer n, integer frames per interval
  double energy_at_discrete = 0.0;    // joules per interval
};

// Closed-form constrained minimum of the expected energy, then discretized
// by evaluating the admissible floor/ceil corners of the continuous point
// (ties broken toward smaller n, then smaller k).
OptimumResult optimize(const EnergyRates& rates, const TierConfig& tier,
                       const TrafficModel& traffic, const CoverageConstraints& constraints,
                       BetaEVariant variant = BetaEVariant::Corrected);

// Exhaustive grid oracle over integer n in [n_min, n_max] and k from
// ceil(k_min) up to k_cap in steps of grid_step. k_cap <= 0 selects the
// default 4*max(1, beta/n_min) frames, which comfortably covers every
// piecewise optimum (they satisfy k* <= max(K_min, gamma/N_max)). Tie
// breaking matches optimize().
OptimumResult brute_force_optimum(const EnergyRates& rates, const TierConfig& tier,
                                  const TrafficModel& traffic,
                                  const CoverageConstraints& constraints,
                                  double grid_step = 1.0, double k_cap = 0.0,
                                  Exec policy = Exec::OpenMp);

}  // namespace vsn
