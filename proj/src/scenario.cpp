#include "vsn/scenario.hpp"

#include <cmath>
#include <fstream>

namespace vsn {

namespace {

double require_number(const nlohmann::json& obj, const char* key, const char* section) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw validation_error(std::string("scenario: missing or non-numeric \"") + section + "." +
                           key + "\"");
  }
  return obj[key].get<double>();
}

const nlohmann::json& require_object(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_object()) {
    throw validation_error(std::string("scenario: missing object \"") + key + "\"");
  }
  return doc[key];
}

TrafficModel parse_traffic(const nlohmann::json& traffic) {
  const double r = require_number(traffic, "r_bits", "traffic");
  if (!traffic.contains("family") || !traffic["family"].is_string()) {
    throw validation_error("scenario: missing \"traffic.family\"");
  }
  const std::string family = traffic["family"].get<std::string>();
  if (family == "uniform") return TrafficModel::uniform(r);
  if (family == "exponential") return TrafficModel::exponential(r);
  if (family == "half-gaussian") return TrafficModel::half_gaussian(r);
  if (family == "pareto") {
    const double alpha = require_number(traffic, "alpha", "traffic");
    ParetoScale scale = ParetoScale::MeanMatched;
    if (traffic.contains("v_mode")) {
      const std::string mode = traffic["v_mode"].get<std::string>();
      if (mode == "kr") {
        scale = ParetoScale::KrScale;
      } else if (mode != "mean-matched") {
        throw validation_error("scenario: traffic.v_mode must be \"mean-matched\" or \"kr\"");
      }
    }
    return TrafficModel::pareto(r, alpha, scale);
  }
  throw validation_error("scenario: unknown traffic.family \"" + family + "\"");
}

}  // namespace

const char* family_name(TrafficFamily family) {
  switch (family) {
    case TrafficFamily::Uniform: return "uniform";
    case TrafficFamily::Pareto: return "pareto";
    case TrafficFamily::Exponential: return "exponential";
    case TrafficFamily::HalfGaussian: return "half-gaussian";
  }
  return "?";
}

Scenario parse_scenario(const nlohmann::json& doc) {
  const nlohmann::json& rates = require_object(doc, "rates");
  const nlohmann::json& tier = require_object(doc, "tier");
  const nlohmann::json& traffic = require_object(doc, "traffic");
  const nlohmann::json& constraints = require_object(doc, "constraints");

  const double t_seconds = require_number(tier, "T_seconds", "tier");
  const double s_per_second = require_number(tier, "s_bits_per_second", "tier");
  const double d_raw = require_number(tier, "d", "tier");
  if (d_raw < 0 || d_raw != std::floor(d_raw)) {
    throw validation_error("scenario: tier.d must be a non-negative integer");
  }
  if (!(t_seconds > 0.0)) throw validation_error("scenario: tier.T_seconds must be > 0");

  return Scenario{
      EnergyRates(require_number(rates, "a", "rates"), require_number(rates, "g", "rates"),
                  require_number(rates, "j", "rates"), require_number(rates, "p", "rates"),
                  require_number(rates, "b", "rates"), require_number(rates, "h", "rates")),
      TierConfig(s_per_second * t_seconds, t_seconds, static_cast<int>(d_raw)),
      parse_traffic(traffic),
      CoverageConstraints(require_number(constraints, "n_min", "constraints"),
                          require_number(constraints, "n_max", "constraints"),
                          require_number(constraints, "k_min_per_second", "constraints") *
                              t_seconds)};
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw validation_error("scenario: cannot open \"" + path.string() + "\"");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw validation_error("scenario: invalid JSON in \"" + path.string() + "\": " + e.what());
  }
  return parse_scenario(doc);
}

}  // namespace vsn
