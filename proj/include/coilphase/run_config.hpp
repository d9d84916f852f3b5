#ifndef COILPHASE_RUN_CONFIG_HPP
#define COILPHASE_RUN_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace coilphase {

/// Configuration error with the offending field path in the message.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Validated run configuration. Parsed from a single JSON document; unknown
/// keys are rejected so typos in physics parameters cannot pass silently.
struct RunConfig {
  struct Medium {
    double epsilon = 2.25;  // relative permittivity
    double zeta = 0.0;      // chirality parameter, S
  } medium;

  struct Helix {
    double radius_m = 0.0;
    double pitch_m = 0.0;
  } helix;

  struct Light {
    std::optional<double> vacuum_wavelength_nm;
    std::optional<double> omega_rad_s;
  } light;

  struct Simulation {
    double spin_j = 1.0;
    int n_max = 30;
    long steps_per_cycle = 10000;
    int cycles = 1;
    double adiabatic_ratio = 1000.0;
  } simulation;

  struct Output {
    std::string format = "csv";  // csv | json
    std::string path;            // empty = stdout
  } output;

  /// Set when |zeta| reaches the small-zeta threshold of the medium.
  bool zeta_warning = false;

  /// Canonical (key-sorted) JSON of the parsed document, hashed into output
  /// metadata.
  std::string canonical_json;

  /// Optical angular frequency in rad/s, from whichever light key was given.
  double omega() const;
};

RunConfig parse_config(const std::string& text);

/// FNV-1a 64-bit hash, hex encoded; used to stamp outputs with their config.
std::string config_hash(const RunConfig& cfg);

}  // namespace coilphase

#endif  // COILPHASE_RUN_CONFIG_HPP
