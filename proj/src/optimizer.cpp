#include "vsn/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "vsn/special_functions.hpp"

namespace vsn {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// a + r[(p+j)(d+1) + hd + g]: the per-frame slope of the energy in k.
double frame_cost(const EnergyRates& rates, const TrafficModel& traffic, int d) {
  return rates.a +
         traffic.r() * ((rates.p + rates.j) * (d + 1) + rates.h * d + rates.g);
}

// Shared feasibility quantity for the k-direction critical point:
// R = 1 - A/((b+p) r (d+1)); the gamma branch exists iff R > 0, which is
// the idling-dominates-transmission condition.
double gamma_feasibility(const EnergyRates& rates, const TrafficModel& traffic, int d) {
  const double denom = (rates.b + rates.p) * traffic.r() * (d + 1);
  return 1.0 - frame_cost(rates, traffic, d) / denom;
}

struct Candidate {
  double energy = std::numeric_limits<double>::infinity();
  double n = 0.0;
  double k = 0.0;
};

// argmin with deterministic tie-breaking: lower energy, then smaller n,
// then smaller k.
void consider(Candidate& best, double energy, double n, double k) {
  if (energy < best.energy ||
      (energy == best.energy && (n < best.n || (n == best.n && k < best.k)))) {
    best = Candidate{energy, n, k};
  }
}

}  // namespace

const char* branch_name(Branch branch) {
  switch (branch) {
    case Branch::GammaInterior: return "gamma-interior";
    case Branch::MaxMin: return "max-min";
    case Branch::BetaInterior: return "beta-interior";
    case Branch::MinMin: return "min-min";
  }
  return "?";
}

double beta(const EnergyRates& rates, const TierConfig& tier, const TrafficModel& traffic,
            BetaEVariant variant) {
  const double r = traffic.r();
  const int d = tier.d;
  const double s = tier.s;
  const double bp = rates.b + rates.p;
  if (!(bp > 0.0)) throw precondition_error("beta: requires b + p > 0");

  switch (traffic.family()) {
    case TrafficFamily::Uniform:
      return s * bp / (2.0 * rates.p * r * (d + 1));
    case TrafficFamily::Pareto: {
      const double alpha = traffic.alpha();
      const double base = traffic.pareto_scale() == ParetoScale::MeanMatched
                              ? s * alpha / (r * (alpha - 1.0) * (d + 1))
                              : s / (r * (d + 1));
      return base * std::pow(rates.b / bp, 1.0 / alpha);
    }
    case TrafficFamily::Exponential: {
      if (!(rates.p > rates.b)) {
        throw precondition_error(
            "beta: Exponential requires p > b (buffering dearer than beaconing)");
      }
      const double denom_rate = variant == BetaEVariant::Corrected ? rates.b : rates.p;
      return s / (r * (d + 1) * std::log(bp / denom_rate));
    }
    case TrafficFamily::HalfGaussian:
      return s / (kSqrtPi * r * (d + 1) * erf_inv(rates.p / bp));
  }
  return 0.0;
}

std::optional<double> gamma(const EnergyRates& rates, const TierConfig& tier,
                            const TrafficModel& traffic) {
  const double r = traffic.r();
  const int d = tier.d;
  const double s = tier.s;
  const double bp = rates.b + rates.p;
  if (!(bp > 0.0)) throw precondition_error("gamma: requires b + p > 0");

  switch (traffic.family()) {
    case TrafficFamily::Uniform:
      return s / 2.0 * std::sqrt(bp / (r * (d + 1) * frame_cost(rates, traffic, d)));
    case TrafficFamily::Pareto: {
      const double alpha = traffic.alpha();
      if (traffic.pareto_scale() == ParetoScale::MeanMatched) {
        const double feas = gamma_feasibility(rates, traffic, d);
        if (!(feas > 0.0)) return std::nullopt;
        return s * alpha / (r * (alpha - 1.0) * (d + 1)) * std::pow(feas, 1.0 / (alpha - 1.0));
      }
      // v = k r (d+1): same derivation with the rescaled dv/dk.
      const double feas =
          1.0 - frame_cost(rates, traffic, d) * (alpha - 1.0) / (bp * alpha * r * (d + 1));
      if (!(feas > 0.0)) return std::nullopt;
      return s / (r * (d + 1)) * std::pow(feas, 1.0 / (alpha - 1.0));
    }
    case TrafficFamily::Exponential: {
      const double feas = gamma_feasibility(rates, traffic, d);
      if (!(feas > 0.0)) return std::nullopt;
      const double w = lambert_w_lower(-feas / std::exp(1.0));
      return -s / (r * (d + 1) * (w + 1.0));
    }
    case TrafficFamily::HalfGaussian:
      throw validation_error("gamma: Half-Gaussian has no k-direction critical point");
  }
  return std::nullopt;
}

namespace {

struct IntegerBounds {
  double n_lo, n_hi, k_lo;
};

IntegerBounds integer_bounds(const CoverageConstraints& constraints) {
  // Nudge against representation noise so e.g. 0.7*154 = 107.80000000000001
  // still ceils to 108 and an integral bound stays itself.
  auto fuzzy_ceil = [](double x) { return std::ceil(x - 1e-9 * std::max(1.0, std::abs(x))); };
  auto fuzzy_floor = [](double x) { return std::floor(x + 1e-9 * std::max(1.0, std::abs(x))); };
  IntegerBounds b;
  b.n_lo = fuzzy_ceil(constraints.n_min);
  b.n_hi = fuzzy_floor(constraints.n_max);
  b.k_lo = std::max(1.0, fuzzy_ceil(constraints.k_min));
  if (b.n_lo > b.n_hi) {
    throw std::domain_error("optimize: no admissible integer node count in [n_min, n_max]");
  }
  return b;
}

OptimumResult discretize(const EnergyRates& rates, const TierConfig& tier,
                         const TrafficModel& traffic, const CoverageConstraints& constraints,
                         OptimumResult result) {
  const IntegerBounds bounds = integer_bounds(constraints);
  const double tol_k = 1e-9 * std::max(1.0, constraints.k_min);

  double n_corners[2] = {std::floor(result.continuous.n), std::ceil(result.continuous.n)};
  double k_corners[2] = {std::floor(result.continuous.k), std::ceil(result.continuous.k)};

  Candidate best;
  for (double n : n_corners) {
    n = std::clamp(n, bounds.n_lo, bounds.n_hi);
    for (double k : k_corners) {
      if (k + tol_k < constraints.k_min) continue;
      if (k < 1.0) continue;
      const double energy =
          expected_energy(rates, tier, traffic, OperatingPoint(n, k)).total;
      consider(best, energy, n, k);
    }
  }
  result.discrete = OperatingPoint(best.n, best.k);
  result.energy_at_discrete = best.energy;
  return result;
}

}  // namespace

OptimumResult optimize(const EnergyRates& rates, const TierConfig& tier,
                       const TrafficModel& traffic, const CoverageConstraints& constraints,
                       BetaEVariant variant) {
  OptimumResult result;
  result.beta = beta(rates, tier, traffic, variant);
  if (traffic.family() != TrafficFamily::HalfGaussian) {
    result.gamma = gamma(rates, tier, traffic);
  }
  // The piecewise solution rests on beta > gamma with a structural margin,
  // which the mean-matched families provide whenever their gamma exists. The
  // explicit-scale (kr) Pareto offers no such guarantee: with idling dearer
  // than transmitting its interior valley can dominate any branch corner.
  // Refuse instead of returning an unvalidated point.
  if (traffic.family() == TrafficFamily::Pareto &&
      traffic.pareto_scale() == ParetoScale::KrScale && result.gamma) {
    throw precondition_error(
        "optimize: explicit-scale (kr) Pareto is only supported in the practical idle "
        "regime (no temporal-direction critical point)");
  }

  const double n_min = constraints.n_min;
  const double n_max = constraints.n_max;
  const double k_min = constraints.k_min;

  if (traffic.family() == TrafficFamily::HalfGaussian) {
    // Three cases; the temporal optimum is always K_min.
    if (k_min <= result.beta / n_max) {
      result.branch = Branch::MaxMin;
      result.continuous = OperatingPoint(n_max, k_min);
    } else if (k_min <= result.beta / n_min) {
      result.branch = Branch::BetaInterior;
      result.continuous = OperatingPoint(result.beta / k_min, k_min);
    } else {
      result.branch = Branch::MinMin;
      result.continuous = OperatingPoint(n_min, k_min);
    }
  } else {
    if (result.gamma && k_min <= *result.gamma / n_max) {
      result.branch = Branch::GammaInterior;
      result.continuous = OperatingPoint(n_max, *result.gamma / n_max);
    } else if (k_min < result.beta / n_max) {
      result.branch = Branch::MaxMin;
      result.continuous = OperatingPoint(n_max, k_min);
    } else if (k_min <= result.beta / n_min) {
      result.branch = Branch::BetaInterior;
      result.continuous = OperatingPoint(result.beta / k_min, k_min);
    } else {
      result.branch = Branch::MinMin;
      result.continuous = OperatingPoint(n_min, k_min);
    }
  }
  return discretize(rates, tier, traffic, constraints, result);
}

OptimumResult brute_force_optimum(const EnergyRates& rates, const TierConfig& tier,
                                  const TrafficModel& traffic,
                                  const CoverageConstraints& constraints, double grid_step,
                                  double k_cap, Exec policy) {
  if (!(grid_step > 0.0)) throw validation_error("brute_force_optimum: grid_step must be > 0");

  // The grid search itself needs no closed forms; beta/gamma are diagnostics
  // and the source of the default k cap. With an explicit cap the oracle
  // also covers rate corners where the closed forms are undefined.
  OptimumResult result;
  result.beta = std::numeric_limits<double>::quiet_NaN();
  try {
    result.beta = beta(rates, tier, traffic);
    if (traffic.family() != TrafficFamily::HalfGaussian) {
      result.gamma = gamma(rates, tier, traffic);
    }
  } catch (const std::exception&) {
    if (k_cap <= 0.0) throw;
  }

  const IntegerBounds bounds = integer_bounds(constraints);
  if (k_cap <= 0.0) {
    k_cap = 4.0 * std::max(1.0, result.beta / constraints.n_min);
  }
  const std::int64_t n_count = static_cast<std::int64_t>(bounds.n_hi - bounds.n_lo) + 1;
  const std::int64_t k_count = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor((k_cap - bounds.k_lo) / grid_step)) + 1);

  // One parallel task per node count; each scans its k column serially, and
  // the per-row minima merge in fixed row order. The lexicographic (E, n, k)
  // tie-break is a total order, so the result is schedule-independent.
  std::vector<Candidate> row_best(static_cast<std::size_t>(n_count));
  for_each_index(policy, n_count, [&](std::int64_t row) {
    const double n = bounds.n_lo + static_cast<double>(row);
    Candidate local;
    for (std::int64_t j = 0; j < k_count; ++j) {
      const double k = bounds.k_lo + grid_step * static_cast<double>(j);
      consider(local, expected_energy(rates, tier, traffic, OperatingPoint(n, k)).total, n, k);
    }
    row_best[static_cast<std::size_t>(row)] = local;
  });

  Candidate best;
  for (const Candidate& cand : row_best) consider(best, cand.energy, cand.n, cand.k);

  result.continuous = OperatingPoint(best.n, best.k);
  result.discrete = OperatingPoint(best.n, best.k);
  result.energy_at_discrete = best.energy;
  // Classify the region the grid argmin landed in, for report symmetry.
  if (std::isfinite(result.beta)) {
    if (result.gamma && constraints.k_min <= *result.gamma / constraints.n_max) {
      result.branch = Branch::GammaInterior;
    } else if (constraints.k_min < result.beta / constraints.n_max) {
      result.branch = Branch::MaxMin;
    } else if (constraints.k_min <= result.beta / constraints.n_min) {
      result.branch = Branch::BetaInterior;
    } else {
      result.branch = Branch::MinMin;
    }
  }
  return result;
}

}  // namespace vsn
