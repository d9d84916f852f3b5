#include "coilphase/chiral_medium.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coilphase {

namespace {

constexpr double kPi = std::numbers::pi;

using constants::speed_of_light;
using constants::vacuum_permeability;
using constants::vacuum_permittivity;

/// Reduced positive roots kappa_h = k_h / (mu0 omega). The smaller root is
/// evaluated as s / (|zeta| + R) so no cancellation of large terms occurs.
struct ReducedRoots {
  double right;
  double left;
};

ReducedRoots reduced_roots(const ChiralMedium& medium) {
  const double s = medium.epsilon() * vacuum_permittivity / vacuum_permeability;
  const double zeta = medium.zeta();
  const double r = std::sqrt(zeta * zeta + s);
  if (zeta >= 0.0) return {s / (r + zeta), r + zeta};
  return {r - zeta, s / (r - zeta)};
}

}  // namespace

ChiralMedium::ChiralMedium(double epsilon, double zeta_siemens)
    : epsilon_(epsilon), zeta_(zeta_siemens) {
  if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_))
    throw std::invalid_argument("ChiralMedium: relative permittivity must be positive");
  if (!std::isfinite(zeta_))
    throw std::invalid_argument("ChiralMedium: chirality parameter must be finite");
}

double ChiralMedium::zeta_scale() const {
  return std::sqrt(epsilon_ * vacuum_permittivity / vacuum_permeability);
}

bool ChiralMedium::small_zeta() const { return std::abs(zeta_) < 0.01 * zeta_scale(); }

DispersionResult dispersion(double omega, const ChiralMedium& medium) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw std::invalid_argument("dispersion: omega must be positive");

  const ReducedRoots kappa = reduced_roots(medium);
  DispersionResult result;
  result.omega = omega;
  result.k_right = vacuum_permeability * omega * kappa.right;
  result.k_left = vacuum_permeability * omega * kappa.left;
  result.delta_k = -2.0 * medium.zeta() * vacuum_permeability * omega;
  return result;
}

PrecessionSplit precession_split(const ChiralMedium& medium, const HelixSpec& helix) {
  const double arc = precession_cycle_length(helix);
  const ReducedRoots kappa = reduced_roots(medium);

  PrecessionSplit split;
  split.small_zeta = medium.small_zeta();

  // Omega_h = 2 pi v_h / arc with v_h = omega / k_h = 1 / (mu0 kappa_h),
  // omega-independent because the medium is non-dispersive.
  split.omega_right = 2.0 * kPi / (vacuum_permeability * kappa.right * arc);
  split.omega_left = 2.0 * kPi / (vacuum_permeability * kappa.left * arc);

  split.delta_omega_first_order = 4.0 * medium.zeta() * kPi * speed_of_light * speed_of_light *
                                  vacuum_permeability / (medium.epsilon() * arc);
  // Omega_R - Omega_L with the root difference telescoped through
  // kappa_R kappa_L = eps eps0 / mu0 and kappa_L - kappa_R = 2 zeta.
  split.delta_omega_exact =
      4.0 * kPi * medium.zeta() /
      (medium.epsilon() * vacuum_permittivity * arc);

  split.delta_t_first_order = -2.0 * medium.zeta() * vacuum_permeability * arc;
  // T_h = arc k_h / omega; the difference telescopes through delta_k.
  split.delta_t_exact = arc * (-2.0 * medium.zeta() * vacuum_permeability);
  return split;
}

EnergyForms field_energy_forms(const ModeAmplitudeSet& modes, const ChiralMedium& medium) {
  if (!(modes.volume > 0.0) || !std::isfinite(modes.volume))
    throw std::invalid_argument("field_energy_forms: volume must be positive");

  const double kappa = medium.epsilon() * vacuum_permittivity +
                       vacuum_permeability * medium.zeta() * medium.zeta();
  const double kv = kappa * modes.volume;
  const double sqrt_kv = std::sqrt(kv);

  EnergyForms w;
  for (const ModeAmplitude& mode : modes.modes) {
    if (!std::isfinite(mode.omega) || !std::isfinite(mode.f.real()) ||
        !std::isfinite(mode.f.imag()))
      throw std::invalid_argument("field_energy_forms: mode entries must be finite");

    w.direct += 2.0 * kv * mode.omega * mode.omega * std::norm(mode.f);

    const double q = sqrt_kv * 2.0 * mode.f.real();           // sqrt(kV) (f + f*)
    const double p = sqrt_kv * mode.omega * 2.0 * mode.f.imag();  // -i sqrt(kV) w (f - f*)
    w.canonical += 0.5 * (p * p + mode.omega * mode.omega * q * q);
  }
  return w;
}

}  // namespace coilphase
