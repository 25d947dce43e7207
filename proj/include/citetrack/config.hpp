#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "citetrack/allocator.hpp"
#include "citetrack/errors.hpp"

namespace citetrack {

// Parsed run configuration. `researchers` and `capacity` drive allocation;
// the remaining fields only matter for simulation and stay optional here so
// the command layer can apply flag overrides and defaults.
struct cli_config {
  std::vector<researcher_profile> researchers;
  double capacity = 0.0;
  std::optional<std::string> model;
  std::optional<double> common_rate;
  std::optional<double> horizon;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
};

namespace detail {

inline double require_number(const nlohmann::json& j, const std::string& key,
                             const std::string& where) {
  if (!j.contains(key))
    throw validation_error("config: missing field '" + where + key + "'");
  if (!j.at(key).is_number())
    throw validation_error("config: field '" + where + key +
                           "' must be a number");
  return j.at(key).get<double>();
}

}  // namespace detail

// Load and schema-check a JSON run configuration. Unknown fields are
// rejected so typos fail loudly; every error names the offending field.
inline cli_config load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot read config file: " + path.string());

  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw validation_error(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw validation_error("config: top level must be an object");

  static const std::set<std::string> known{"researchers", "capacity", "model",
                                           "common_rate", "horizon", "trials",
                                           "seed"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key))
      throw validation_error("config: unknown field '" + key + "'");

  cli_config cfg;

  if (!j.contains("researchers"))
    throw validation_error("config: missing field 'researchers'");
  if (!j.at("researchers").is_array() || j.at("researchers").empty())
    throw validation_error(
        "config: field 'researchers' must be a non-empty array");
  std::size_t idx = 0;
  for (const nlohmann::json& r : j.at("researchers")) {
    const std::string where = "researchers[" + std::to_string(idx) + "].";
    if (!r.is_object())
      throw validation_error("config: field 'researchers[" +
                             std::to_string(idx) + "]' must be an object");
    for (const auto& [key, value] : r.items())
      if (key != "lambda" && key != "mu")
        throw validation_error("config: unknown field '" + where + key + "'");
    researcher_profile profile;
    profile.lambda = detail::require_number(r, "lambda", where);
    profile.mu = detail::require_number(r, "mu", where);
    cfg.researchers.push_back(profile);
    ++idx;
  }

  cfg.capacity = detail::require_number(j, "capacity", "");

  if (j.contains("model")) {
    if (!j.at("model").is_string())
      throw validation_error("config: field 'model' must be a string");
    const std::string m = j.at("model").get<std::string>();
    if (m != "poisson" && m != "deterministic" && m != "common_thinned")
      throw validation_error(
          "config: field 'model' must be one of poisson, deterministic, "
          "common_thinned");
    cfg.model = m;
  }
  if (j.contains("common_rate"))
    cfg.common_rate = detail::require_number(j, "common_rate", "");
  if (j.contains("horizon"))
    cfg.horizon = detail::require_number(j, "horizon", "");
  if (j.contains("trials")) {
    if (!j.at("trials").is_number_integer())
      throw validation_error("config: field 'trials' must be an integer");
    cfg.trials = j.at("trials").get<std::int64_t>();
    if (*cfg.trials < 1)
      throw validation_error("config: field 'trials' must be at least 1");
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned())
      throw validation_error(
          "config: field 'seed' must be a non-negative integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  return cfg;
}

}  // namespace citetrack
