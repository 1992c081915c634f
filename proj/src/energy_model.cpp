#include "vsn/energy_model.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "vsn/quadrature.hpp"

namespace vsn {

namespace {

void check_point(const OperatingPoint& point) {
  if (!(point.n > 0.0) || !(point.k > 0.0)) {
    throw std::domain_error("expected_energy: n and k must be > 0");
  }
}

}  // namespace

EnergyBreakdown expected_energy(const EnergyRates& rates, const TierConfig& tier,
                                const TrafficModel& traffic, const OperatingPoint& point) {
  check_point(point);
  const double k = point.k;
  const double kr = k * traffic.r();
  const double m = aggregate_mean(traffic, k, tier.d);
  const double c = tier.s / point.n;
  const double deficit = deficit_integral(traffic, k, tier.d, c);

  // Expected buffered bits, I(c) - c + kr(d+1). Non-negative for the
  // mean-matched families; rounding residue of the subtraction is squashed
  // (a genuinely negative value only arises for the explicit-scale Pareto,
  // orders of magnitude above this threshold).
  double buffered_bits = deficit - c + m;
  if (buffered_bits < 0.0 && buffered_bits > -1e-12 * (c + m)) buffered_bits = 0.0;

  return EnergyBreakdown::from_components(
      /*acquisition=*/k * rates.a,
      /*processing=*/rates.g * kr,
      /*transmit=*/rates.j * m,
      /*receive_relay=*/rates.h * kr * tier.d,
      /*buffering=*/rates.p * buffered_bits,
      /*idle=*/rates.b * deficit);
}

double expected_energy_quadrature(const EnergyRates& rates, const TierConfig& tier,
                                  const TrafficModel& traffic, const OperatingPoint& point) {
  check_point(point);
  const double k = point.k;
  const int d = tier.d;
  const double kr = k * traffic.r();
  const double m = aggregate_mean(traffic, k, d);
  const double c = tier.s / point.n;

  GaussKronrod::Options opt;
  opt.abs_tol = 1e-13 * std::max(c, m);
  opt.rel_tol = 1e-12;

  const auto pdf = [&](double x) { return density(traffic, k, d, x); };

  // Integrates f over [lo, hi] in geometrically growing segments of initial
  // width `scale`. When hi is orders of magnitude beyond the distribution
  // scale, a single panel would put every node past the density mass and
  // accept 0; segmenting keeps each panel's dynamic range small.
  const auto segmented = [&](auto&& f, double lo, double hi, double scale) {
    double total = 0.0;
    double a = lo;
    double width = scale;
    while (a < hi) {
      const double b = std::min(hi, a + width);
      total += GaussKronrod::integrate(f, a, b, opt);
      a = b;
      width *= 8.0;
    }
    return total;
  };

  // Idle term: integral over [0, c], cut at support boundaries.
  double idle_integral = 0.0;
  {
    const auto integrand = [&](double x) { return (c - x) * pdf(x); };
    switch (traffic.family()) {
      case TrafficFamily::Uniform:
        idle_integral = GaussKronrod::integrate(integrand, 0.0, std::min(c, 2.0 * m), opt);
        break;
      case TrafficFamily::Pareto: {
        const double v = pareto_scale_value(traffic, k, d);
        const double lo = std::min(v, c);
        idle_integral = segmented(integrand, lo, c, std::max(lo, m));
        break;
      }
      case TrafficFamily::Exponential:
      case TrafficFamily::HalfGaussian:
        idle_integral = segmented(integrand, 0.0, c, m);
        break;
    }
  }

  // Overflow term: integral over [c, inf), transformed to a finite interval.
  double overflow = 0.0;
  switch (traffic.family()) {
    case TrafficFamily::Uniform: {
      if (c < 2.0 * m) {
        overflow = GaussKronrod::integrate(
            [&](double x) { return (x - c) * pdf(x); }, c, 2.0 * m, opt);
      }
      break;
    }
    case TrafficFamily::Pareto: {
      // Substituting u = (lo/x)^{alpha-1} maps the tail onto (0,1] and turns
      // the integrand into the smooth alpha beta (v/lo)^alpha (lo - c u^beta)
      // with beta = 1/(alpha-1); no endpoint singularity remains.
      const double v = pareto_scale_value(traffic, k, d);
      const double lo = std::max(c, v);
      const double alpha = traffic.alpha();
      const double beta_exp = 1.0 / (alpha - 1.0);
      const double coef = alpha * beta_exp * std::pow(v / lo, alpha);
      overflow = GaussKronrod::integrate(
          [&](double u) { return coef * (lo - c * std::pow(u, beta_exp)); }, 0.0, 1.0, opt);
      break;
    }
    case TrafficFamily::Exponential:
    case TrafficFamily::HalfGaussian: {
      // x = c + m t/(1-t) maps [0,1) onto [c, inf).
      overflow = GaussKronrod::integrate(
          [&](double t) {
            if (t >= 1.0) return 0.0;
            const double one_minus = 1.0 - t;
            const double x = c + m * t / one_minus;
            return (x - c) * pdf(x) * m / (one_minus * one_minus);
          },
          0.0, 1.0, opt);
      break;
    }
  }

  return k * rates.a + (rates.g + rates.j) * kr + (rates.h + rates.j) * kr * d +
         rates.p * overflow + rates.b * idle_integral;
}

EnergySurface energy_surface(const EnergyRates& rates, const TierConfig& tier,
                             const TrafficModel& traffic, const std::vector<double>& n_values,
                             const std::vector<double>& k_values, Exec policy) {
  if (n_values.empty() || k_values.empty()) {
    throw validation_error("energy_surface: axes must be non-empty");
  }
  auto strictly_increasing_positive = [](const std::vector<double>& axis) {
    double prev = 0.0;
    for (double v : axis) {
      if (!(v > prev)) return false;
      prev = v;
    }
    return true;
  };
  if (!strictly_increasing_positive(n_values) || !strictly_increasing_positive(k_values)) {
    throw validation_error("energy_surface: axes must be strictly increasing and positive");
  }

  EnergySurface surface{rates, tier, traffic, n_values, k_values, {}};
  surface.cells.resize(n_values.size() * k_values.size());

  const std::int64_t total = static_cast<std::int64_t>(surface.cells.size());
  const std::size_t cols = k_values.size();
  for_each_index(policy, total, [&](std::int64_t index) {
    const std::size_t i = static_cast<std::size_t>(index) / cols;
    const std::size_t j = static_cast<std::size_t>(index) % cols;
    surface.cells[index] =
        expected_energy(rates, tier, traffic, OperatingPoint(n_values[i], k_values[j]));
  });
  return surface;
}

void write_surface_csv(std::ostream& out, const EnergySurface& surface, NormalizationMode mode) {
  out << "# normalization="
      << (mode == NormalizationMode::PerSecond ? "per-second" : "per-interval") << '\n';
  out << "n,k,acquisition,processing,transmit,receive_relay,buffering,idle,total\n";
  const double k_scale = mode == NormalizationMode::PerSecond ? 1.0 / surface.tier.t : 1.0;
  out.precision(12);
  for (std::size_t i = 0; i < surface.n_values.size(); ++i) {
    for (std::size_t j = 0; j < surface.k_values.size(); ++j) {
      const EnergyBreakdown cell = normalize(surface.at(i, j), surface.tier, mode);
      out << surface.n_values[i] << ',' << surface.k_values[j] * k_scale << ','
          << cell.acquisition << ',' << cell.processing << ',' << cell.transmit << ','
          << cell.receive_relay << ',' << cell.buffering << ',' << cell.idle << ','
          << cell.total << '\n';
    }
  }
}

}  // namespace vsn
