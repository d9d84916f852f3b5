#ifndef COILPHASE_RUNNER_HPP
#define COILPHASE_RUNNER_HPP

#include <vector>

#include "coilphase/result_table.hpp"
#include "coilphase/run_config.hpp"

namespace coilphase {

/// Per-occupation cyclic phases of both handednesses for the configured
/// helix: solid angle, first- and second-quantized phases, vacuum phase,
/// and the angle-variable relation columns.
ResultTable run_phases(const RunConfig& cfg);

/// Closed-form versus extracted geometric phase for every helicity at the
/// configured adiabatic ratio.
ResultTable run_evolve(const RunConfig& cfg);

/// Dispersion roots and precession split, one row per chirality value.
ResultTable run_chiral(const RunConfig& cfg, const std::vector<double>& zeta_sweep);

/// Second-quantized occupation phase table for the configured helix.
ResultTable run_fock(const RunConfig& cfg);

struct ValidationItem {
  std::string invariant;
  double tolerance = 0.0;
  double measured = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool all_pass() const;
};

/// Runs the invariant suite of every module at the configured parameters.
ValidationReport run_validate(const RunConfig& cfg);

/// Machine-readable rendering of the validation report.
std::string to_json_text(const ValidationReport& report, const RunConfig& cfg,
                         long long seed);

}  // namespace coilphase

#endif  // COILPHASE_RUNNER_HPP
