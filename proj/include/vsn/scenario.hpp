#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "vsn/core_types.hpp"
#include "vsn/traffic.hpp"

namespace vsn {

// Parsed scenario file. Inputs use per-second units where noted; the stored
// values are already converted to the canonical per-interval frame.
struct Scenario {
  EnergyRates rates;
  TierConfig tier;
  TrafficModel traffic;
  CoverageConstraints constraints;
};

// Schema:
//   {
//     "rates": {"a":J, "g":J/bit, "j":J/bit, "p":J/bit, "b":J/bit, "h":J/bit},
//     "tier": {"s_bits_per_second":N, "T_seconds":N, "d":N},
//     "traffic": {"family":"uniform|pareto|exponential|half-gaussian",
//                 "r_bits":N, "alpha":N?, "v_mode":"mean-matched"|"kr"?},
//     "constraints": {"n_min":N, "n_max":N, "k_min_per_second":N}
//   }
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::filesystem::path& path);

const char* family_name(TrafficFamily family);

}  // namespace vsn
