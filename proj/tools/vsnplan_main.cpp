// vsnplan: planning CLI for tiered visual-sensor-network deployments.
// Subcommands: surface | optimize | simulate | compare | fit.
// Exit codes: 0 ok, 2 input validation, 3 I/O failure, 4 model precondition.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsn/energy_model.hpp"
#include "vsn/errors.hpp"
#include "vsn/fitting.hpp"
#include "vsn/monte_carlo.hpp"
#include "vsn/optimizer.hpp"
#include "vsn/scenario.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitPrecondition = 4;

struct CommonOptions {
  std::string scenario_path;
  std::string normalization = "per-second";
};

vsn::NormalizationMode norm_mode(const CommonOptions& common) {
  if (common.normalization == "per-second") return vsn::NormalizationMode::PerSecond;
  if (common.normalization == "per-interval") return vsn::NormalizationMode::PerInterval;
  throw vsn::validation_error("--normalization must be per-second or per-interval");
}

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--scenario", common.scenario_path, "Scenario JSON path")->required();
  cmd->add_option("--normalization", common.normalization,
                  "per-second (default) or per-interval");
}

// "start:stop[:step]" or a single value, in the units of the axis.
std::vector<double> parse_range(const std::string& text, double fallback_step) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      parts.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw vsn::validation_error("bad range \"" + text + "\"");
    }
  }
  std::vector<double> values;
  if (parts.size() == 1) {
    values.push_back(parts[0]);
  } else if (parts.size() == 2 || parts.size() == 3) {
    const double step = parts.size() == 3 ? parts[2] : fallback_step;
    if (!(step > 0.0) || parts[1] < parts[0]) {
      throw vsn::validation_error("bad range \"" + text + "\"");
    }
    for (double v = parts[0]; v <= parts[1] + 1e-9 * step; v += step) values.push_back(v);
  } else {
    throw vsn::validation_error("bad range \"" + text + "\"");
  }
  return values;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open output file \"" + path + "\"");
  return out;
}

json optimum_to_json(const vsn::OptimumResult& result, const vsn::Scenario& scenario,
                     vsn::NormalizationMode mode) {
  const double t = scenario.tier.t;
  const double k_scale = mode == vsn::NormalizationMode::PerSecond ? 1.0 / t : 1.0;
  const double e_scale = k_scale;
  json doc;
  doc["family"] = vsn::family_name(scenario.traffic.family());
  doc["beta"] = result.beta * k_scale;
  doc["gamma"] = result.gamma ? json(*result.gamma * k_scale) : json(nullptr);
  doc["branch"] = vsn::branch_name(result.branch);
  doc["continuous"] = {{"n", result.continuous.n}, {"k", result.continuous.k * k_scale}};
  doc["discrete"] = {{"n", result.discrete.n}, {"k", result.discrete.k * k_scale},
                     {"k_frames", result.discrete.k}};
  doc["energy_J"] = result.energy_at_discrete * e_scale;
  doc["normalization"] =
      mode == vsn::NormalizationMode::PerSecond ? "per-second" : "per-interval";
  return doc;
}

int cmd_surface(const CommonOptions& common, const std::string& n_range,
                const std::string& k_range, const std::string& out_path) {
  const vsn::Scenario scenario = vsn::load_scenario(common.scenario_path);
  const vsn::NormalizationMode mode = norm_mode(common);

  std::vector<double> n_values;
  if (n_range.empty()) {
    for (double n = std::ceil(scenario.constraints.n_min);
         n <= std::floor(scenario.constraints.n_max); n += 1.0) {
      n_values.push_back(n);
    }
  } else {
    n_values = parse_range(n_range, 1.0);
  }

  std::vector<double> k_values;  // per second on the command line
  if (k_range.empty()) {
    k_values.push_back(scenario.constraints.k_min / scenario.tier.t);
  } else {
    k_values = parse_range(k_range, 1.0);
  }
  for (double& k : k_values) k *= scenario.tier.t;  // to frames per interval

  const vsn::EnergySurface surface =
      vsn::energy_surface(scenario.rates, scenario.tier, scenario.traffic, n_values, k_values);
  std::ofstream out = open_output(out_path);
  vsn::write_surface_csv(out, surface, mode);
  if (!out.good()) throw std::ios_base::failure("write failed for \"" + out_path + "\"");
  return kExitOk;
}

int cmd_optimize(const CommonOptions& common, bool paper_literal_beta_e) {
  const vsn::Scenario scenario = vsn::load_scenario(common.scenario_path);
  const vsn::BetaEVariant variant =
      paper_literal_beta_e ? vsn::BetaEVariant::PaperLiteral : vsn::BetaEVariant::Corrected;
  const vsn::OptimumResult result = vsn::optimize(scenario.rates, scenario.tier,
                                                  scenario.traffic, scenario.constraints, variant);
  std::cout << optimum_to_json(result, scenario, norm_mode(common)).dump(2) << '\n';
  return kExitOk;
}

int cmd_simulate(const CommonOptions& common, std::int64_t intervals, std::uint64_t seed,
                 const std::string& mode_name, const std::string& out_path,
                 const std::string& k_range) {
  const vsn::Scenario scenario = vsn::load_scenario(common.scenario_path);
  const vsn::NormalizationMode norm = norm_mode(common);
  vsn::CouplingMode mode;
  if (mode_name == "marginal") {
    mode = vsn::CouplingMode::Marginal;
  } else if (mode_name == "compositional") {
    mode = vsn::CouplingMode::Compositional;
  } else {
    throw vsn::validation_error("--mode must be marginal or compositional");
  }

  std::vector<double> n_values;
  for (double n = std::ceil(scenario.constraints.n_min);
       n <= std::floor(scenario.constraints.n_max); n += 1.0) {
    n_values.push_back(n);
  }
  std::vector<double> k_values{scenario.constraints.k_min / scenario.tier.t};
  if (!k_range.empty()) k_values = parse_range(k_range, 1.0);

  const vsn::SimulationReport report =
      vsn::validate_surface(scenario.rates, scenario.tier, scenario.traffic, n_values, k_values,
                            intervals, seed, mode);

  const double scale = norm == vsn::NormalizationMode::PerSecond ? 1.0 / scenario.tier.t : 1.0;
  json doc;
  doc["seed"] = report.seed;
  doc["mode"] = vsn::coupling_mode_name(report.mode);
  doc["intervals"] = report.intervals;
  doc["normalization"] =
      norm == vsn::NormalizationMode::PerSecond ? "per-second" : "per-interval";
  doc["mean_abs_err_pct"] = report.mean_abs_err_pct;
  doc["max_err_pct"] = report.max_err_pct;
  doc["r_squared"] = report.r_squared ? json(*report.r_squared) : json(nullptr);
  doc["cells"] = json::array();
  for (const vsn::SimulationCell& cell : report.cells) {
    doc["cells"].push_back({{"n", cell.n},
                            {"k", cell.k_per_second},
                            {"k_frames", cell.k_frames},
                            {"analytic_J", cell.analytic * scale},
                            {"sim_mean_J", cell.sim_mean * scale},
                            {"sim_sd_J", cell.sim_sd * scale},
                            {"err_pct", cell.err_pct}});
  }
  if (!out_path.empty()) {
    std::ofstream out = open_output(out_path);
    vsn::write_report_csv(out, report, scenario.tier, norm);
    if (!out.good()) throw std::ios_base::failure("write failed for \"" + out_path + "\"");
  }
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_compare(const CommonOptions& common, double adhoc_n, double adhoc_k_per_second,
                bool paper_literal_beta_e) {
  const vsn::Scenario scenario = vsn::load_scenario(common.scenario_path);
  const vsn::NormalizationMode norm = norm_mode(common);
  const vsn::BetaEVariant variant =
      paper_literal_beta_e ? vsn::BetaEVariant::PaperLiteral : vsn::BetaEVariant::Corrected;

  const vsn::OptimumResult optimum = vsn::optimize(scenario.rates, scenario.tier,
                                                   scenario.traffic, scenario.constraints,
                                                   variant);
  const double adhoc_k = adhoc_k_per_second * scenario.tier.t;
  const double e_adhoc = vsn::expected_energy(scenario.rates, scenario.tier, scenario.traffic,
                                              vsn::OperatingPoint(adhoc_n, adhoc_k))
                             .total;
  const double gain = (e_adhoc - optimum.energy_at_discrete) / e_adhoc;

  const double scale = norm == vsn::NormalizationMode::PerSecond ? 1.0 / scenario.tier.t : 1.0;
  json doc;
  doc["optimal"] = optimum_to_json(optimum, scenario, norm);
  doc["adhoc"] = {{"n", adhoc_n},
                  {"k", adhoc_k * scale},
                  {"energy_J", e_adhoc * scale}};
  doc["gain"] = gain;
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

std::vector<double> load_sizes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vsn::validation_error("cannot open sizes file \"" + path + "\"");
  std::vector<double> sizes;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    try {
      std::size_t used = 0;
      const double value = std::stod(line.substr(first), &used);
      const auto rest = line.find_first_not_of(" \t\r", first + used);
      if (rest != std::string::npos) throw std::invalid_argument("trailing junk");
      if (!(value >= 0.0)) throw std::invalid_argument("negative");
      sizes.push_back(value);
    } catch (const std::exception&) {
      throw vsn::validation_error("sizes file \"" + path + "\": malformed line " +
                                  std::to_string(line_no));
    }
  }
  if (sizes.empty()) throw vsn::validation_error("sizes file \"" + path + "\" has no data");
  return sizes;
}

std::vector<vsn::SurfaceSample> load_reference_surface(const std::string& path,
                                                       const vsn::TierConfig& tier,
                                                       vsn::NormalizationMode norm) {
  std::ifstream in(path);
  if (!in) throw vsn::validation_error("cannot open surface file \"" + path + "\"");
  std::vector<vsn::SurfaceSample> samples;
  std::string line;
  int line_no = 0;
  const double k_scale = norm == vsn::NormalizationMode::PerSecond ? tier.t : 1.0;
  const double e_scale = k_scale;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.find("n,k") != std::string::npos) continue;  // header
    std::stringstream ss(line);
    std::string tok;
    std::vector<double> fields;
    try {
      while (std::getline(ss, tok, ',')) fields.push_back(std::stod(tok));
    } catch (const std::exception&) {
      fields.clear();
    }
    if (fields.size() != 3) {
      throw vsn::validation_error("surface file \"" + path + "\": malformed line " +
                                  std::to_string(line_no));
    }
    samples.push_back({fields[0], fields[1] * k_scale, fields[2] * e_scale});
  }
  return samples;
}

int cmd_fit(const CommonOptions& common, const std::string& sizes_path,
            const std::string& surface_path, double alpha, double frames_override) {
  const vsn::Scenario scenario = vsn::load_scenario(common.scenario_path);
  const vsn::NormalizationMode norm = norm_mode(common);
  if (sizes_path.empty() && surface_path.empty()) {
    throw vsn::validation_error("fit: need --sizes and/or --surface");
  }

  json doc;
  double r_hat = scenario.traffic.r();
  const double frames = frames_override > 0.0
                            ? frames_override
                            : std::max(1.0, std::round(scenario.constraints.k_min));

  std::vector<double> sizes;
  if (!sizes_path.empty()) {
    sizes = load_sizes(sizes_path);
    r_hat = vsn::fit_mean(sizes, frames, scenario.tier.d);
    doc["r_hat_bits_per_frame"] = r_hat;
    doc["sizes_count"] = sizes.size();
    doc["frames_per_interval"] = frames;
  }

  std::vector<vsn::CandidateScore> candidates = vsn::default_candidates(r_hat, alpha);
  if (!sizes.empty()) {
    json ks = json::object();
    for (const vsn::CandidateScore& cand : candidates) {
      ks[cand.label] =
          vsn::ks_statistic(sizes, cand.model, frames, scenario.tier.d);
    }
    doc["ks_diagnostics"] = ks;
  }

  if (!surface_path.empty()) {
    const std::vector<vsn::SurfaceSample> reference =
        load_reference_surface(surface_path, scenario.tier, norm);
    const vsn::FitResult fit = vsn::select_family(reference, scenario.rates, scenario.tier,
                                                  std::move(candidates), r_hat);
    doc["best_family"] = fit.best().label;
    doc["ranking"] = json::array();
    for (const vsn::CandidateScore& cand : fit.ranking) {
      doc["ranking"].push_back(
          {{"family", cand.label}, {"r_squared", cand.r2 ? json(*cand.r2) : json(nullptr)}});
    }
  }

  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy planning for tiered visual sensor networks"};
  app.require_subcommand(1);

  auto* surface = app.add_subcommand("surface", "Write the energy surface as CSV");
  CommonOptions surface_common;
  std::string surface_n_range, surface_k_range, surface_out;
  add_common(surface, surface_common);
  surface->add_option("--n-range", surface_n_range, "n axis start:stop[:step]");
  surface->add_option("--k-range", surface_k_range, "k axis (per second) start:stop[:step]");
  surface->add_option("--out", surface_out, "Output CSV path")->required();

  auto* optimize = app.add_subcommand("optimize", "Closed-form optimal (n, k)");
  CommonOptions optimize_common;
  bool optimize_literal = false;
  add_common(optimize, optimize_common);
  optimize->add_flag("--paper-literal-beta-e", optimize_literal,
                     "Use the printed Exponential beta (ln((b+p)/p)) instead of the corrected one");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo validation of the model");
  CommonOptions simulate_common;
  std::int64_t intervals = 100000;
  std::uint64_t seed = 1;
  std::string sim_mode = "marginal", sim_out, sim_k_range;
  add_common(simulate, simulate_common);
  simulate->add_option("--intervals", intervals, "Replications per cell");
  simulate->add_option("--seed", seed, "RNG seed");
  simulate->add_option("--mode", sim_mode, "marginal (default) or compositional");
  simulate->add_option("--out", sim_out, "Optional CSV report path");
  simulate->add_option("--k-range", sim_k_range, "k axis (per second) start:stop[:step]");

  auto* compare = app.add_subcommand("compare", "Optimal vs ad-hoc operating point");
  CommonOptions compare_common;
  double adhoc_n = 0.0, adhoc_k = 0.0;
  bool compare_literal = false;
  add_common(compare, compare_common);
  compare->add_option("--adhoc-n", adhoc_n, "Ad-hoc node count")->required();
  compare->add_option("--adhoc-k", adhoc_k, "Ad-hoc frames per second")->required();
  compare->add_flag("--paper-literal-beta-e", compare_literal, "See optimize");

  auto* fit = app.add_subcommand("fit", "Fit a traffic model to measurements");
  CommonOptions fit_common;
  std::string fit_sizes, fit_surface;
  double fit_alpha = 4.0, fit_frames = 0.0;
  add_common(fit, fit_common);
  fit->add_option("--sizes", fit_sizes, "Newline-delimited per-interval sizes in bits");
  fit->add_option("--surface", fit_surface, "Reference surface CSV: n,k,joules");
  fit->add_option("--alpha", fit_alpha, "Pareto shape for the candidate set (default 4)");
  fit->add_option("--frames", fit_frames, "Frames per interval the sizes were captured at");

  try {
    app.parse(argc, argv);
    if (surface->parsed()) {
      return cmd_surface(surface_common, surface_n_range, surface_k_range, surface_out);
    }
    if (optimize->parsed()) return cmd_optimize(optimize_common, optimize_literal);
    if (simulate->parsed()) {
      return cmd_simulate(simulate_common, intervals, seed, sim_mode, sim_out, sim_k_range);
    }
    if (compare->parsed()) {
      return cmd_compare(compare_common, adhoc_n, adhoc_k, compare_literal);
    }
    if (fit->parsed()) {
      return cmd_fit(fit_common, fit_sizes, fit_surface, fit_alpha, fit_frames);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const vsn::precondition_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const vsn::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
