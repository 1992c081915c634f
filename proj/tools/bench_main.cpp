// Timing comparison of the serial reference kernels against the OpenMP ones.
// The two policies are bit-identical by construction; this binary reports
// wall times, speedups, and verifies the equality on the way.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vsn/energy_model.hpp"
#include "vsn/monte_carlo.hpp"
#include "vsn/optimizer.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
double timed(Fn&& fn) {
  const auto start = Clock::now();
  fn();
  return seconds_since(start);
}

void row(const char* name, double serial_s, double omp_s, bool identical) {
  std::printf("%-28s %10.3f s %10.3f s   x%.2f   %s\n", name, serial_s, omp_s,
              serial_s / omp_s, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t intervals = 200000;
  if (argc > 1) intervals = std::strtoll(argv[1], nullptr, 10);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled\n");
#endif
  std::printf("%-28s %12s %12s\n", "kernel", "serial", "openmp");

  const vsn::EnergyRates rates(0.019, 4.40e-8, 2.20e-7, 2.86e-7, 1.90e-7, 2.92e-6);
  const vsn::TierConfig tier(144000.0 * 154.0, 154.0, 0);
  const vsn::TrafficModel traffic = vsn::TrafficModel::uniform(5200.0);

  {
    std::vector<double> n_values;
    for (int n = 2; n <= 16; ++n) n_values.push_back(n);
    const std::vector<double> k_values{2.0};
    vsn::SimulationReport serial, omp;
    const double t_serial = timed([&] {
      serial = vsn::validate_surface(rates, tier, traffic, n_values, k_values, intervals, 42,
                                     vsn::CouplingMode::Marginal, vsn::Exec::Serial);
    });
    const double t_omp = timed([&] {
      omp = vsn::validate_surface(rates, tier, traffic, n_values, k_values, intervals, 42,
                                  vsn::CouplingMode::Marginal, vsn::Exec::OpenMp);
    });
    bool identical = serial.cells.size() == omp.cells.size();
    for (std::size_t i = 0; identical && i < serial.cells.size(); ++i) {
      identical = serial.cells[i].sim_mean == omp.cells[i].sim_mean &&
                  serial.cells[i].sim_sd == omp.cells[i].sim_sd;
    }
    row("monte-carlo surface", t_serial, t_omp, identical);
  }

  // The erf-weighted half-Gaussian closed form gives the surface and grid
  // kernels enough arithmetic per cell to be worth distributing.
  const vsn::TrafficModel hg_traffic = vsn::TrafficModel::half_gaussian(5200.0);

  {
    std::vector<double> n_values, k_values;
    for (int n = 2; n <= 128; ++n) n_values.push_back(n);
    for (int k = 1; k <= 1600; ++k) k_values.push_back(154.0 * k / 16.0);
    auto start = Clock::now();
    const vsn::EnergySurface serial =
        vsn::energy_surface(rates, tier, hg_traffic, n_values, k_values, vsn::Exec::Serial);
    const double t_serial = seconds_since(start);
    start = Clock::now();
    const vsn::EnergySurface omp =
        vsn::energy_surface(rates, tier, hg_traffic, n_values, k_values, vsn::Exec::OpenMp);
    const double t_omp = seconds_since(start);
    bool identical = serial.cells.size() == omp.cells.size();
    for (std::size_t i = 0; identical && i < serial.cells.size(); ++i) {
      identical = serial.cells[i].total == omp.cells[i].total;
    }
    row("energy surface", t_serial, t_omp, identical);
  }

  {
    const vsn::CoverageConstraints constraints(2.0, 64.0, 154.0);
    vsn::OptimumResult serial, omp;
    const double t_serial = timed([&] {
      serial = vsn::brute_force_optimum(rates, tier, hg_traffic, constraints, 0.03125, 6000.0,
                                        vsn::Exec::Serial);
    });
    const double t_omp = timed([&] {
      omp = vsn::brute_force_optimum(rates, tier, hg_traffic, constraints, 0.03125, 6000.0,
                                     vsn::Exec::OpenMp);
    });
    const bool identical = serial.discrete.n == omp.discrete.n &&
                           serial.discrete.k == omp.discrete.k &&
                           serial.energy_at_discrete == omp.energy_at_discrete;
    row("brute-force grid", t_serial, t_omp, identical);
  }

  return 0;
}
