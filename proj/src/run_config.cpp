#include "coilphase/run_config.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <string>

#include <json.hpp>

#include "coilphase/chiral_medium.hpp"

namespace coilphase {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::string& path,
                         const std::set<std::string>& allowed) {
  for (const auto& item : object.items()) {
    if (!allowed.count(item.key()))
      throw ConfigError("unknown key '" + (path.empty() ? item.key() : path + "." + item.key()) +
                        "'");
  }
}

const json* find(const json& object, const char* key) {
  auto it = object.find(key);
  return it == object.end() ? nullptr : &*it;
}

double number_at(const json& value, const std::string& path) {
  if (!value.is_number()) throw ConfigError("'" + path + "' must be a number");
  return value.get<double>();
}

double positive_at(const json& value, const std::string& path) {
  const double v = number_at(value, path);
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("'" + path + "' must be positive");
  return v;
}

long positive_integer_at(const json& value, const std::string& path) {
  if (!value.is_number_integer())
    throw ConfigError("'" + path + "' must be a positive integer");
  const long v = value.get<long>();
  if (v < 1) throw ConfigError("'" + path + "' must be a positive integer");
  return v;
}

}  // namespace

double RunConfig::omega() const {
  if (light.omega_rad_s) return *light.omega_rad_s;
  return 2.0 * std::numbers::pi * 299792458.0 / (*light.vacuum_wavelength_nm * 1e-9);
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  reject_unknown_keys(doc, "", {"medium", "helix", "light", "simulation", "output"});

  RunConfig cfg;

  if (const json* medium = find(doc, "medium")) {
    if (!medium->is_object()) throw ConfigError("'medium' must be an object");
    reject_unknown_keys(*medium, "medium", {"epsilon", "zeta"});
    if (const json* v = find(*medium, "epsilon")) cfg.medium.epsilon = positive_at(*v, "medium.epsilon");
    if (const json* v = find(*medium, "zeta")) {
      cfg.medium.zeta = number_at(*v, "medium.zeta");
      if (!std::isfinite(cfg.medium.zeta)) throw ConfigError("'medium.zeta' must be finite");
    }
  }

  const json* helix = find(doc, "helix");
  if (!helix) throw ConfigError("missing required key 'helix'");
  if (!helix->is_object()) throw ConfigError("'helix' must be an object");
  reject_unknown_keys(*helix, "helix", {"radius_m", "pitch_m"});
  if (const json* v = find(*helix, "radius_m"))
    cfg.helix.radius_m = positive_at(*v, "helix.radius_m");
  else
    throw ConfigError("missing required key 'helix.radius_m'");
  if (const json* v = find(*helix, "pitch_m"))
    cfg.helix.pitch_m = positive_at(*v, "helix.pitch_m");
  else
    throw ConfigError("missing required key 'helix.pitch_m'");

  const json* light = find(doc, "light");
  if (!light) throw ConfigError("missing required key 'light'");
  if (!light->is_object()) throw ConfigError("'light' must be an object");
  reject_unknown_keys(*light, "light", {"vacuum_wavelength_nm", "omega_rad_s"});
  const json* wavelength = find(*light, "vacuum_wavelength_nm");
  const json* omega = find(*light, "omega_rad_s");
  if (wavelength && omega)
    throw ConfigError(
        "'light.vacuum_wavelength_nm' and 'light.omega_rad_s' are mutually exclusive; give "
        "exactly one");
  if (!wavelength && !omega)
    throw ConfigError("one of 'light.vacuum_wavelength_nm' or 'light.omega_rad_s' is required");
  if (wavelength)
    cfg.light.vacuum_wavelength_nm = positive_at(*wavelength, "light.vacuum_wavelength_nm");
  if (omega) cfg.light.omega_rad_s = positive_at(*omega, "light.omega_rad_s");

  if (const json* simulation = find(doc, "simulation")) {
    if (!simulation->is_object()) throw ConfigError("'simulation' must be an object");
    reject_unknown_keys(*simulation, "simulation",
                        {"spin_j", "n_max", "steps_per_cycle", "cycles", "adiabatic_ratio"});
    if (const json* v = find(*simulation, "spin_j")) {
      cfg.simulation.spin_j = number_at(*v, "simulation.spin_j");
      if (cfg.simulation.spin_j != 0.5 && cfg.simulation.spin_j != 1.0)
        throw ConfigError("'simulation.spin_j' must be 0.5 or 1");
    }
    if (const json* v = find(*simulation, "n_max"))
      cfg.simulation.n_max = static_cast<int>(positive_integer_at(*v, "simulation.n_max"));
    if (const json* v = find(*simulation, "steps_per_cycle"))
      cfg.simulation.steps_per_cycle = positive_integer_at(*v, "simulation.steps_per_cycle");
    if (const json* v = find(*simulation, "cycles"))
      cfg.simulation.cycles = static_cast<int>(positive_integer_at(*v, "simulation.cycles"));
    if (const json* v = find(*simulation, "adiabatic_ratio"))
      cfg.simulation.adiabatic_ratio = positive_at(*v, "simulation.adiabatic_ratio");
  }

  if (const json* output = find(doc, "output")) {
    if (!output->is_object()) throw ConfigError("'output' must be an object");
    reject_unknown_keys(*output, "output", {"format", "path"});
    if (const json* v = find(*output, "format")) {
      if (!v->is_string()) throw ConfigError("'output.format' must be a string");
      cfg.output.format = v->get<std::string>();
      if (cfg.output.format != "csv" && cfg.output.format != "json")
        throw ConfigError("'output.format' must be 'csv' or 'json'");
    }
    if (const json* v = find(*output, "path")) {
      if (!v->is_string()) throw ConfigError("'output.path' must be a string");
      cfg.output.path = v->get<std::string>();
    }
  }

  cfg.zeta_warning = !ChiralMedium(cfg.medium.epsilon, cfg.medium.zeta).small_zeta();
  cfg.canonical_json = doc.dump();
  return cfg;
}

std::string config_hash(const RunConfig& cfg) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char byte : cfg.canonical_json) {
    hash ^= byte;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

}  // namespace coilphase
