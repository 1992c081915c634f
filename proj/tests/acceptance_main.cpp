// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vsn/energy_model.hpp"
#include "vsn/monte_carlo.hpp"
#include "vsn/optimizer.hpp"
#include "vsn/special_functions.hpp"

namespace {

using vsn::CoverageConstraints;
using vsn::EnergyRates;
using vsn::OperatingPoint;
using vsn::OptimumResult;
using vsn::ParetoScale;
using vsn::SplitMix64;
using vsn::TierConfig;
using vsn::TrafficFamily;
using vsn::TrafficModel;

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

int failures = 0;

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", value);
  return buf;
}

void report(const char* id, const char* what, bool pass, const std::string& detail,
            double seconds, double budget_seconds) {
  const bool in_budget = seconds < budget_seconds;
  if (!pass || !in_budget) ++failures;
  std::printf("%-5s %-52s %s  [%s; %.2f s / budget %.0f s]\n", id, what,
              pass && in_budget ? "PASS" : "FAIL", detail.c_str(), seconds, budget_seconds);
}

template <typename Fn>
void criterion(const char* id, const char* what, double budget_seconds, const Fn& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  report(id, what, pass, detail, seconds, budget_seconds);
}

EnergyRates jpeg_rates() { return EnergyRates(0.019, 4.40e-8, 2.20e-7, 2.86e-7, 1.90e-7, 2.92e-6); }
EnergyRates vf_rates() { return EnergyRates(0.012786, 1.90e-8, 2.20e-7, 2.86e-7, 1.90e-7, 2.92e-6); }

TrafficModel make_model(TrafficFamily family, double r, double alpha) {
  switch (family) {
    case TrafficFamily::Uniform: return TrafficModel::uniform(r);
    case TrafficFamily::Pareto: return TrafficModel::pareto(r, alpha);
    case TrafficFamily::Exponential: return TrafficModel::exponential(r);
    default: return TrafficModel::half_gaussian(r);
  }
}

double log_uniform(SplitMix64& rng, double lo_exp, double hi_exp) {
  return std::pow(10.0, lo_exp + (hi_exp - lo_exp) * rng.next_double());
}

struct DrawnScenario {
  EnergyRates rates;
  TierConfig tier;
  TrafficModel traffic;
  CoverageConstraints constraints;
};

// Random admissible scenario in canonical per-interval units (T = 1), placed
// inside the propositions' validity domain: gamma-branch draws satisfy the
// idle-dominates-transmission condition with the interior point well clear of
// the discretization corners; practical draws keep b below j so the gamma
// branch stays closed (for Uniform that is enforced against the Eq.-(18)
// value, whose critical point leaves the support otherwise).
std::optional<DrawnScenario> try_draw(SplitMix64& rng, TrafficFamily family, bool gamma_branch) {
  const int d = static_cast<int>(rng.next_u64() % 4);
  const double r = log_uniform(rng, 2.0, 4.5);
  const double alpha = 1.5 + 4.5 * rng.next_double();
  const double j = log_uniform(rng, -8.0, -6.0);
  const double h = j * log_uniform(rng, 0.0, 1.2);
  const double g = log_uniform(rng, -9.0, -7.3);
  const double a = log_uniform(rng, -4.0, -1.5);

  double b, p;
  if (gamma_branch) {
    const double threshold = j + a / (r * (d + 1)) + (h * d + g) / (d + 1);
    b = threshold * (1.5 + 2.5 * rng.next_double());
    p = b * (1.1 + 2.0 * rng.next_double());
  } else {
    b = j * (0.3 + 0.65 * rng.next_double());
    p = b * (1.05 + 3.0 * rng.next_double());
  }
  const EnergyRates rates(a, g, j, p, b, h);

  const double n_min = 1.0 + static_cast<double>(rng.next_u64() % 4);
  const double n_max = n_min + 3.0 + static_cast<double>(rng.next_u64() % 18);
  // Gamma-branch draws keep K_min small so the interior ridge stays inside a
  // brute-force grid of tractable size.
  const double k_min =
      1.0 + static_cast<double>(rng.next_u64() % (gamma_branch ? 6 : 12));

  const TrafficModel traffic = make_model(family, r, alpha);
  const TierConfig unit_tier(1.0, 1.0, d);
  const double beta_unit = beta(rates, unit_tier, traffic);

  double s;
  if (gamma_branch) {
    const auto gamma_unit = gamma(rates, unit_tier, traffic);
    if (!gamma_unit) return std::nullopt;
    const double k0_target = std::max(4.0, 1.05 * k_min) * (1.0 + rng.next_double());
    s = n_max * k0_target / *gamma_unit;
  } else {
    const int region = static_cast<int>(rng.next_u64() % 3);
    double beta_target;
    if (region == 0) {
      beta_target = k_min * n_max * (1.2 + 1.8 * rng.next_double());
    } else if (region == 1) {
      beta_target = k_min * (n_min + (n_max - n_min) * rng.next_double());
    } else {
      beta_target = k_min * n_min * (0.2 + 0.7 * rng.next_double());
    }
    s = beta_target / beta_unit;
  }
  if (!(s > 0.0) || !std::isfinite(s)) return std::nullopt;

  const TierConfig tier(s, 1.0, d);
  const double beta_value = beta(rates, tier, traffic);
  if (4.0 * std::max(1.0, beta_value / n_min) > 2500.0) return std::nullopt;
  if (family != TrafficFamily::HalfGaussian && !gamma_branch) {
    const auto gamma_value = gamma(rates, tier, traffic);
    // Reject draws where a practically-spurious gamma branch would fire.
    if (gamma_value && k_min <= *gamma_value / n_max) return std::nullopt;
  }
  return DrawnScenario{rates, tier, traffic, CoverageConstraints(n_min, n_max, k_min)};
}

DrawnScenario draw_scenario(SplitMix64& rng, TrafficFamily family, bool gamma_branch) {
  for (;;) {
    auto drawn = try_draw(rng, family, gamma_branch);
    if (drawn) return *drawn;
  }
}

const TrafficFamily kFamilies[] = {TrafficFamily::Uniform, TrafficFamily::Pareto,
                                   TrafficFamily::Exponential, TrafficFamily::HalfGaussian};

void ac1(std::string& detail, bool& pass) {
  SplitMix64 rng(1001);
  double max_rel = 0.0;
  for (TrafficFamily family : kFamilies) {
    for (int i = 0; i < 1000; ++i) {
      const double r = log_uniform(rng, 2.0, 5.0);
      const double alpha = 1.5 + 4.5 * rng.next_double();
      const TrafficModel traffic = make_model(family, r, alpha);
      const TierConfig tier(log_uniform(rng, 3.5, 6.5), 1.0,
                            static_cast<int>(rng.next_u64() % 4));
      const OperatingPoint point(1.0 + 30.0 * rng.next_double(),
                                 0.2 + 8.0 * rng.next_double());
      const double closed = expected_energy(jpeg_rates(), tier, traffic, point).total;
      const double quad = expected_energy_quadrature(jpeg_rates(), tier, traffic, point);
      max_rel = std::max(max_rel, std::abs(closed - quad) / closed);
    }
  }
  pass = max_rel <= 1e-9;
  detail = "max rel " + sci(max_rel);
}

void ac2(std::string& detail, bool& pass) {
  const CoverageConstraints constraints(2.0, 16.0, 308.0);
  struct Row {
    TrafficFamily family;
    int d;
    double n_expected;
  };
  const Row rows[] = {
      {TrafficFamily::Uniform, 0, 12.0},      {TrafficFamily::Uniform, 2, 4.0},
      {TrafficFamily::HalfGaussian, 0, 13.0}, {TrafficFamily::HalfGaussian, 2, 4.0},
      {TrafficFamily::Exponential, 0, 15.0},  {TrafficFamily::Exponential, 2, 5.0},
  };
  pass = true;
  for (const Row& row : rows) {
    const TierConfig tier(144000.0 * 154.0, 154.0, row.d);
    const TrafficModel traffic = make_model(row.family, 5200.0, 4.0);
    const OptimumResult result = optimize(jpeg_rates(), tier, traffic, constraints);
    if (result.discrete.n != row.n_expected || result.discrete.k != 308.0) {
      pass = false;
      detail += " mismatch family " + std::to_string(static_cast<int>(row.family)) + " d " +
                std::to_string(row.d) + " got n=" + std::to_string(result.discrete.n);
    }
  }
  // Pareto rows: must equal the brute-force argmin ({15,2} and {5,2}), which
  // deviates from the printed {16,2}/{6,2}; asserted, not hidden.
  const double printed[2] = {16.0, 6.0};
  const double expected[2] = {15.0, 5.0};
  const int degrees[2] = {0, 2};
  for (int idx = 0; idx < 2; ++idx) {
    const TierConfig tier(144000.0 * 154.0, 154.0, degrees[idx]);
    const TrafficModel traffic = TrafficModel::pareto(5200.0, 4.0);
    const OptimumResult opt = optimize(jpeg_rates(), tier, traffic, constraints);
    const OptimumResult brute =
        brute_force_optimum(jpeg_rates(), tier, traffic, constraints, 1.0, 1000.0);
    if (opt.discrete.n != brute.discrete.n || opt.discrete.k != brute.discrete.k ||
        opt.discrete.n != expected[idx] || opt.discrete.n == printed[idx]) {
      pass = false;
      detail += " pareto d" + std::to_string(degrees[idx]) + " got n=" +
                std::to_string(opt.discrete.n);
    }
  }
  if (pass) detail = "6 table rows + pareto-vs-oracle deviation asserted";
}

void ac3(std::string& detail, bool& pass) {
  SplitMix64 rng(3003);
  int checked = 0, mismatches = 0;
  int branch_counts[4] = {0, 0, 0, 0};
  for (TrafficFamily family : kFamilies) {
    for (int i = 0; i < 500; ++i) {
      const bool gamma_branch =
          family != TrafficFamily::HalfGaussian && (i % 4 == 0);
      const DrawnScenario sc = draw_scenario(rng, family, gamma_branch);
      const OptimumResult opt = optimize(sc.rates, sc.tier, sc.traffic, sc.constraints);
      const OptimumResult brute =
          brute_force_optimum(sc.rates, sc.tier, sc.traffic, sc.constraints);
      ++checked;
      ++branch_counts[static_cast<int>(opt.branch)];
      if (opt.discrete.n != brute.discrete.n || opt.discrete.k != brute.discrete.k) {
        ++mismatches;
      }
    }
  }
  const bool all_branches = branch_counts[0] > 0 && branch_counts[1] > 0 &&
                            branch_counts[2] > 0 && branch_counts[3] > 0;
  pass = mismatches == 0 && all_branches;
  detail = std::to_string(checked) + " scenarios, " + std::to_string(mismatches) +
           " mismatches; branches g/max/beta/min " + std::to_string(branch_counts[0]) + "/" +
           std::to_string(branch_counts[1]) + "/" + std::to_string(branch_counts[2]) + "/" +
           std::to_string(branch_counts[3]);
}

void ac4(std::string& detail, bool& pass) {
  pass = true;
  detail.clear();
  // Spot value: Table IV operating point.
  {
    const TrafficModel traffic = TrafficModel::pareto(20600.0, 4.0, ParetoScale::KrScale);
    const TierConfig tier(144000.0, 1.0, 0);
    const double e =
        expected_energy(jpeg_rates(), tier, traffic, OperatingPoint(10.0, 0.7)).total;
    if (std::abs(e - 0.017) > 0.05 * 0.017) {
      pass = false;
      detail += " E(10,0.7)=" + std::to_string(e);
    }
  }
  // Gains against the ad-hoc minimum-constraint deployments.
  struct GainCase {
    EnergyRates rates;
    double r, k_min_ps, paper_gain_pct;
  };
  const GainCase cases[] = {
      {jpeg_rates(), 20600.0, 0.7, 37.4},
      {jpeg_rates(), 20600.0, 2.0, 7.9},
      {vf_rates(), 11700.0, 1.25, 30.8},
      {vf_rates(), 11700.0, 2.0, 18.1},
  };
  const double t = 154.0;
  for (const GainCase& c : cases) {
    const TrafficModel traffic = TrafficModel::pareto(c.r, 4.0, ParetoScale::KrScale);
    const TierConfig tier(144000.0 * t, t, 0);
    const CoverageConstraints constraints(2.0, 10.0, c.k_min_ps * t);
    const OptimumResult opt = optimize(c.rates, tier, traffic, constraints);
    const double e_adhoc =
        expected_energy(c.rates, tier, traffic, OperatingPoint(2.0, c.k_min_ps * t)).total;
    const double gain_pct = 100.0 * (e_adhoc - opt.energy_at_discrete) / e_adhoc;
    if (std::abs(gain_pct - c.paper_gain_pct) > 5.0) {
      pass = false;
      detail += " gain " + std::to_string(gain_pct) + " vs " + std::to_string(c.paper_gain_pct);
    } else {
      detail += (detail.empty() ? "gains " : ", ") + std::to_string(gain_pct).substr(0, 5);
    }
  }
}

void ac5(std::string& detail, bool& pass) {
  const TierConfig tier(144000.0 * 154.0, 154.0, 0);
  const TrafficModel traffic = TrafficModel::uniform(5200.0);
  std::vector<double> n_values;
  for (int n = 2; n <= 16; ++n) n_values.push_back(n);
  const vsn::SimulationReport report =
      vsn::validate_surface(jpeg_rates(), tier, traffic, n_values, {2.0}, 100000, 20240509,
                            vsn::CouplingMode::Marginal);
  pass = report.mean_abs_err_pct <= 2.0 && report.max_err_pct <= 2.0 && report.r_squared &&
         *report.r_squared >= 0.995;
  detail = "mean err " + sci(report.mean_abs_err_pct) + "%, max err " +
           sci(report.max_err_pct) + "%, R^2 " +
           (report.r_squared ? std::to_string(*report.r_squared) : std::string("absent"));
}

void ac6(std::string& detail, bool& pass) {
  SplitMix64 rng(6006);
  int checked = 0, violations = 0;
  while (checked < 10000) {
    const std::uint64_t pick = rng.next_u64() % 3;
    const TrafficFamily family = pick == 0   ? TrafficFamily::Uniform
                                 : pick == 1 ? TrafficFamily::Pareto
                                             : TrafficFamily::Exponential;
    // Uniform's gamma always exists; Pareto/Exponential need the synthetic
    // idle-dominant regime.
    const bool gamma_branch = family != TrafficFamily::Uniform || rng.next_double() < 0.5;
    const auto sc = try_draw(rng, family, gamma_branch);
    if (!sc) continue;
    const auto gamma_value = gamma(sc->rates, sc->tier, sc->traffic);
    if (!gamma_value) continue;
    const double beta_value = beta(sc->rates, sc->tier, sc->traffic);
    ++checked;
    if (!(beta_value > *gamma_value)) ++violations;
  }
  pass = violations == 0;
  detail = "10000 draws, " + std::to_string(violations) + " ordering violations";
}

void ac7(std::string& detail, bool& pass) {
  SplitMix64 rng(7007);
  pass = true;
  detail.clear();

  // (a) Joint rescaling of (s, r) and of (s, K_min) leaves continuous n* fixed.
  double worst_shift = 0.0;
  int done = 0;
  while (done < 200) {
    const TrafficFamily family = kFamilies[rng.next_u64() % 4];
    const auto sc = try_draw(rng, family, false);
    if (!sc) continue;
    const OptimumResult base = optimize(sc->rates, sc->tier, sc->traffic, sc->constraints);
    if (base.branch != vsn::Branch::BetaInterior) continue;
    const double lambda = 0.1 + 9.9 * rng.next_double();

    const TierConfig scaled_tier(sc->tier.s * lambda, 1.0, sc->tier.d);
    const TrafficModel scaled_traffic =
        make_model(family, sc->traffic.r() * lambda, sc->traffic.alpha());
    const OptimumResult scaled_sr =
        optimize(sc->rates, scaled_tier, scaled_traffic, sc->constraints);

    const CoverageConstraints scaled_constraints(sc->constraints.n_min, sc->constraints.n_max,
                                                 sc->constraints.k_min * lambda);
    const OptimumResult scaled_sk =
        optimize(sc->rates, scaled_tier, sc->traffic, scaled_constraints);
    // The statement is about the beta-governed solution; skip draws that the
    // rescaled Uniform gamma value pushes into a different branch.
    if (scaled_sr.branch != vsn::Branch::BetaInterior ||
        scaled_sk.branch != vsn::Branch::BetaInterior) {
      continue;
    }
    worst_shift = std::max(worst_shift,
                           std::abs(scaled_sr.continuous.n - base.continuous.n) /
                               base.continuous.n);
    worst_shift = std::max(worst_shift,
                           std::abs(scaled_sk.continuous.n - base.continuous.n) /
                               base.continuous.n);
    ++done;
  }
  if (worst_shift > 1e-9) {
    pass = false;
    detail += " n* shift " + sci(worst_shift);
  }

  // (b) First-order conditions at interior continuous optima.
  double worst_grad = 0.0;
  done = 0;
  while (done < 100) {
    const TrafficFamily family = kFamilies[rng.next_u64() % 4];
    const bool gamma_branch = family != TrafficFamily::HalfGaussian && (done % 2 == 0);
    const auto sc = try_draw(rng, family, gamma_branch);
    if (!sc) continue;
    const OptimumResult result = optimize(sc->rates, sc->tier, sc->traffic, sc->constraints);
    const double n0 = result.continuous.n;
    const double k0 = result.continuous.k;
    auto energy = [&](double n, double k) {
      return expected_energy(sc->rates, sc->tier, sc->traffic, OperatingPoint(n, k)).total;
    };
    if (result.branch == vsn::Branch::BetaInterior) {
      const double h = 1e-6 * n0;
      const double grad = (energy(n0 + h, k0) - energy(n0 - h, k0)) / (2.0 * h);
      const double scale = std::abs(energy(2.0 * n0, k0) - energy(n0, k0)) / n0;
      if (scale > 0.0) worst_grad = std::max(worst_grad, std::abs(grad) / scale);
      ++done;
    } else if (result.branch == vsn::Branch::GammaInterior) {
      const double h = 1e-6 * k0;
      const double grad = (energy(n0, k0 + h) - energy(n0, k0 - h)) / (2.0 * h);
      const double scale = std::abs(energy(n0, 2.0 * k0) - energy(n0, k0)) / k0;
      if (scale > 0.0) worst_grad = std::max(worst_grad, std::abs(grad) / scale);
      ++done;
    }
  }
  if (worst_grad > 1e-4) {
    pass = false;
    detail += " grad ratio " + sci(worst_grad);
  }

  // (c) Accounting-form vs add-subtract-form totals, with the overflow term
  // from independently derived closed forms.
  double worst_identity = 0.0;
  for (int i = 0; i < 400; ++i) {
    const TrafficFamily family = kFamilies[rng.next_u64() % 4];
    const double r = log_uniform(rng, 2.0, 5.0);
    const double alpha = 1.5 + 4.5 * rng.next_double();
    const TrafficModel traffic = make_model(family, r, alpha);
    const int d = static_cast<int>(rng.next_u64() % 4);
    const TierConfig tier(log_uniform(rng, 3.5, 6.5), 1.0, d);
    const EnergyRates rates = jpeg_rates();
    const double k = 0.2 + 8.0 * rng.next_double();
    const double n = 1.0 + 30.0 * rng.next_double();
    const double c = tier.s / n;
    const double m = aggregate_mean(traffic, k, d);
    const double deficit = deficit_integral(traffic, k, d, c);
    double over;  // independently derived per family
    switch (family) {
      case TrafficFamily::Uniform:
        over = c <= 2.0 * m ? (2.0 * m - c) * (2.0 * m - c) / (4.0 * m) : 0.0;
        break;
      case TrafficFamily::Pareto: {
        const double v = pareto_scale_value(traffic, k, d);
        over = c <= v ? alpha * v / (alpha - 1.0) - c
                      : v * std::pow(v / c, alpha - 1.0) / (alpha - 1.0);
        break;
      }
      case TrafficFamily::Exponential:
        over = m * std::exp(-c / m);
        break;
      default:
        over = m * std::exp(-c * c / (kPi * m * m)) - c * std::erfc(c / (kSqrtPi * m));
        break;
    }
    const double kr = k * traffic.r();
    const double common = k * rates.a + (rates.g + rates.j) * kr + (rates.h + rates.j) * kr * d;
    const double eq1 = common + rates.p * over + rates.b * deficit;
    const double eq2 = common + rates.p * m - rates.p * c + (rates.b + rates.p) * deficit;
    const double model = expected_energy(rates, tier, traffic, OperatingPoint(n, k)).total;
    worst_identity = std::max(worst_identity, std::abs(eq1 - eq2) / model);
    worst_identity = std::max(worst_identity, std::abs(eq2 - model) / model);
  }
  if (worst_identity > 1e-12) {
    pass = false;
    detail += " identity residual " + sci(worst_identity);
  }
  if (pass) {
    detail = "n* shift " + sci(worst_shift) + ", grad ratio " + sci(worst_grad) +
             ", identity " + sci(worst_identity);
  }
}

void ac8(std::string& detail, bool& pass) {
  SplitMix64 rng(8008);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double y = -0.999999 + 1.999998 * rng.next_double();
    worst = std::max(worst, std::abs(vsn::erf(vsn::erf_inv(y)) - y));
  }
  const double inv_e = 1.0 / std::exp(1.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = -inv_e + inv_e * rng.next_double() * 0.9999999;
    if (!(x < 0.0)) continue;
    const double w = vsn::lambert_w_lower(x);
    worst = std::max(worst, std::abs(w * std::exp(w) - x) / std::abs(x));
  }
  const double branch_w = std::abs(vsn::lambert_w_lower(-inv_e) + 1.0);
  const double branch_erf = std::abs(vsn::erf_inv(0.0));
  pass = worst <= 1e-10 && branch_w <= 1e-9 && branch_erf <= 1e-9;
  detail = "max residual " + sci(worst) + ", branch point dev " + sci(branch_w);
}

}  // namespace

int main() {
  std::printf("vsnplan acceptance suite\n");
  criterion("AC-1", "closed-form energy vs quadrature (4x1000 draws)", 30.0,
            [](std::string& d) { bool p = false; ac1(d, p); return p; });
  criterion("AC-2", "validation-table optima reproduced", 5.0,
            [](std::string& d) { bool p = false; ac2(d, p); return p; });
  criterion("AC-3", "optimizer equals brute-force oracle (4x500)", 120.0,
            [](std::string& d) { bool p = false; ac3(d, p); return p; });
  criterion("AC-4", "application-table energy and gains", 1.0,
            [](std::string& d) { bool p = false; ac4(d, p); return p; });
  criterion("AC-5", "Monte-Carlo convergence on the validation grid", 120.0,
            [](std::string& d) { bool p = false; ac5(d, p); return p; });
  criterion("AC-6", "beta > gamma ordering (10000 draws)", 10.0,
            [](std::string& d) { bool p = false; ac6(d, p); return p; });
  criterion("AC-7", "scale invariance, gradients, accounting identity", 60.0,
            [](std::string& d) { bool p = false; ac7(d, p); return p; });
  criterion("AC-8", "special-function residuals and branch points", 10.0,
            [](std::string& d) { bool p = false; ac8(d, p); return p; });
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d criterion(s) FAILED\n", failures);
  }
  return failures;
}
