#ifndef COILPHASE_CHIRAL_MEDIUM_HPP
#define COILPHASE_CHIRAL_MEDIUM_HPP

#include <vector>

#include "coilphase/fiber_geometry.hpp"
#include "coilphase/types.hpp"

namespace coilphase {

namespace constants {
// CODATA 2018.
inline constexpr double speed_of_light = 299792458.0;             // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;   // F/m
inline constexpr double vacuum_permeability = 1.25663706212e-6;   // H/m
}  // namespace constants

/// Homogeneous chiral medium with constitutive relations
/// D = eps eps0 E + i zeta B and H = i zeta E + B / mu0.
class ChiralMedium {
 public:
  ChiralMedium(double epsilon, double zeta_siemens);

  double epsilon() const { return epsilon_; }
  double zeta() const { return zeta_; }

  /// sqrt(eps eps0 / mu0), the admittance scale zeta is compared against.
  double zeta_scale() const;

  /// |zeta| < 0.01 * zeta_scale(); first-order split formulas hold to ~1e-4.
  bool small_zeta() const;

 private:
  double epsilon_ = 1.0;
  double zeta_ = 0.0;
};

/// Positive roots of k^2 +/- 2 zeta mu0 omega k - eps eps0 mu0 omega^2 = 0.
/// delta_k carries the closed-form difference -2 zeta mu0 omega rather than
/// the subtraction of the two roots.
struct DispersionResult {
  double omega = 0.0;    // rad/s
  double k_right = 0.0;  // rad/m
  double k_left = 0.0;   // rad/m
  double delta_k = 0.0;  // k_right - k_left
};

DispersionResult dispersion(double omega, const ChiralMedium& medium);

/// Handedness split of the precession rate and period on a helix.
/// The first-order fields evaluate the small-zeta formulas
/// 4 zeta pi c^2 mu0 / (eps arc) and -2 zeta mu0 arc verbatim; the exact
/// fields come from the dispersion roots, with differences telescoped
/// through delta_k so no large-root cancellation occurs.
struct PrecessionSplit {
  double omega_right = 0.0;  // rad/s
  double omega_left = 0.0;   // rad/s
  double delta_omega_first_order = 0.0;
  double delta_omega_exact = 0.0;
  double delta_t_first_order = 0.0;  // s
  double delta_t_exact = 0.0;        // s
  bool small_zeta = true;
};

PrecessionSplit precession_split(const ChiralMedium& medium, const HelixSpec& helix);

struct ModeAmplitude {
  double omega = 0.0;  // rad/s
  Complex f;           // dimensionless amplitude
};

struct ModeAmplitudeSet {
  std::vector<ModeAmplitude> modes;
  double volume = 0.0;  // m^3
};

/// Field energy evaluated two ways: directly as
/// 2 (eps eps0 + mu0 zeta^2) V sum_l omega_l^2 |f_l|^2, and through the
/// canonical pair q_l, p_l as sum_l (p_l^2 + omega_l^2 q_l^2)/2.
struct EnergyForms {
  double direct = 0.0;     // J
  double canonical = 0.0;  // J
};

EnergyForms field_energy_forms(const ModeAmplitudeSet& modes, const ChiralMedium& medium);

}  // namespace coilphase

#endif  // COILPHASE_CHIRAL_MEDIUM_HPP
