#include "coilphase/runner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "coilphase/chiral_medium.hpp"
#include "coilphase/coherent_states.hpp"
#include "coilphase/evolution.hpp"
#include "coilphase/fiber_geometry.hpp"
#include "coilphase/fock_modes.hpp"
#include "coilphase/logging.hpp"
#include "coilphase/spin_algebra.hpp"
#include "coilphase/version.hpp"

namespace coilphase {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::pair<std::string, std::string>> base_metadata(const RunConfig& cfg,
                                                               const std::string& subcommand) {
  return {{"subcommand", subcommand},
          {"version", version_string},
          {"config_hash", config_hash(cfg)}};
}

HelixSpec helix_from(const RunConfig& cfg) {
  return HelixSpec::from_index(cfg.helix.radius_m, cfg.helix.pitch_m,
                               std::sqrt(cfg.medium.epsilon));
}

int rows_per_handedness(const RunConfig& cfg) { return std::min(10, cfg.simulation.n_max); }

double relative_difference(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace

ResultTable run_phases(const RunConfig& cfg) {
  const HelixSpec helix = helix_from(cfg);
  const double theta = helix_polar_angle(helix);
  const double omega_prec = precession_frequency(helix);
  const double period = 2.0 * kPi / omega_prec;

  const PathSchedule schedule =
      PathSchedule::parametric(theta, omega_prec, 0.0, cfg.omega(), period);
  const SpinOperatorSet ops = make_spin_operators(1.0);

  // First-quantized cyclic phase per handedness (right = helicity +1).
  const double first_right = geometric_phase(schedule, +1.0, ops);
  const double first_left = geometric_phase(schedule, -1.0, ops);

  ResultTable table;
  table.name = "phases";
  table.metadata = base_metadata(cfg, "phases");
  table.columns = {"handedness",
                   "n",
                   "theta_rad",
                   "solid_angle_sr",
                   "gamma_first_quantized_rad",
                   "gamma_second_quantized_rad",
                   "gamma_vacuum_rad",
                   "hannay_delta_theta_rad",
                   "gamma0_rad"};

  const double omega_sr = solid_angle(theta);
  for (Handedness h : {Handedness::left, Handedness::right}) {
    const double first = h == Handedness::right ? first_right : first_left;
    const double vacuum = second_quantized_berry_phase(h, 0, theta);
    for (int n = 0; n <= rows_per_handedness(cfg); ++n) {
      const HannayCheck hannay = hannay_relation_check(h, n, theta);
      table.rows.push_back({std::string(1, handedness_label(h)), static_cast<long long>(n),
                            theta, omega_sr, first, second_quantized_berry_phase(h, n, theta),
                            vacuum, hannay.delta_theta, hannay.gamma0});
    }
  }
  return table;
}

ResultTable run_evolve(const RunConfig& cfg) {
  const HelixSpec helix = helix_from(cfg);
  const double theta = helix_polar_angle(helix);
  const double omega_prec = precession_frequency(helix);
  const double ratio = cfg.simulation.adiabatic_ratio;
  if (ratio < 100.0)
    log_message(LogLevel::warn,
                "adiabatic_ratio " + format_number(ratio) +
                    " is below 100; the eigenframe decomposition degrades");

  const double duration = cfg.simulation.cycles * 2.0 * kPi / omega_prec;
  const PathSchedule schedule =
      PathSchedule::parametric(theta, omega_prec, 0.0, ratio * omega_prec, duration);
  const SpinOperatorSet ops = make_spin_operators(cfg.simulation.spin_j);

  ResultTable table;
  table.name = "evolve";
  table.metadata = base_metadata(cfg, "evolve");
  table.columns = {"m",
                   "gamma_g_closed_rad",
                   "gamma_g_extracted_rad",
                   "gamma_d_rad",
                   "abs_error_rad",
                   "steps",
                   "adiabatic_ratio",
                   "physical"};

  const long steps = cfg.simulation.steps_per_cycle * cfg.simulation.cycles;
  for (double m = ops.j; m >= -ops.j - 0.25; m -= 1.0) {
    const double closed =
        -2.0 * kPi * (1.0 - std::cos(theta)) * m * cfg.simulation.cycles;
    PhaseExtraction extraction;
    try {
      extraction = extract_phases(schedule, m, ops, steps);
    } catch (const StepSizeError& e) {
      throw std::runtime_error(std::string(e.what()) +
                               " (try raising simulation.steps_per_cycle)");
    }
    table.rows.push_back({m, closed, extraction.phases.geometric, extraction.phases.dynamical,
                          std::abs(extraction.phases.geometric - closed),
                          static_cast<long long>(extraction.steps_used), ratio,
                          static_cast<long long>(std::abs(m) == ops.j ? 1 : 0)});
  }
  return table;
}

ResultTable run_chiral(const RunConfig& cfg, const std::vector<double>& zeta_sweep) {
  const HelixSpec helix = helix_from(cfg);
  const double arc = precession_cycle_length(helix);
  const double omega = cfg.omega();

  std::vector<double> sweep = zeta_sweep;
  if (sweep.empty()) sweep.push_back(cfg.medium.zeta);

  ResultTable table;
  table.name = "chiral";
  table.metadata = base_metadata(cfg, "chiral");
  table.columns = {"zeta_S",
                   "k_right_rad_m",
                   "k_left_rad_m",
                   "delta_k_rad_m",
                   "omega_prec_right_rad_s",
                   "omega_prec_left_rad_s",
                   "delta_omega_first_order_rad_s",
                   "delta_omega_exact_rad_s",
                   "delta_t_first_order_s",
                   "delta_t_exact_s"};

  for (double zeta : sweep) {
    const ChiralMedium medium(cfg.medium.epsilon, zeta);
    if (!medium.small_zeta())
      log_message(LogLevel::warn, "zeta " + format_number(zeta) +
                                      " exceeds the small-zeta threshold " +
                                      format_number(0.01 * medium.zeta_scale()) +
                                      "; first-order split columns lose accuracy");
    const DispersionResult disp = dispersion(omega, medium);
    const PrecessionSplit split = precession_split(medium, helix);
    const double delta_t_exact = arc * disp.delta_k / omega;
    table.rows.push_back({zeta, disp.k_right, disp.k_left, disp.delta_k, split.omega_right,
                          split.omega_left, split.delta_omega_first_order,
                          split.delta_omega_exact, split.delta_t_first_order, delta_t_exact});
  }
  return table;
}

ResultTable run_fock(const RunConfig& cfg) {
  const double theta = helix_polar_angle(helix_from(cfg));
  const OccupationPhaseTable phases = occupation_phase_table(theta, rows_per_handedness(cfg));

  ResultTable table;
  table.name = "fock";
  table.metadata = base_metadata(cfg, "fock");
  table.columns = {"handedness", "n", "theta_rad", "gamma_g_rad"};
  for (const OccupationPhaseRow& row : phases)
    table.rows.push_back({std::string(1, handedness_label(row.handedness)),
                          static_cast<long long>(row.n), row.theta, row.gamma_g});
  return table;
}

bool ValidationReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const ValidationItem& item) { return item.pass; });
}

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(ValidationReport& report) : report_(report) {}

  void add(const std::string& invariant, double tolerance, double measured) {
    report_.items.push_back({invariant, tolerance, measured, measured <= tolerance});
  }

 private:
  ValidationReport& report_;
};

Eigen::Vector3d random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    v = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
  } while (v.norm() < 1e-3);
  return v.normalized();
}

OperatorMatrix random_anti_hermitian(std::mt19937_64& rng, Eigen::Index dim, double scale) {
  std::normal_distribution<double> gauss(0.0, scale);
  OperatorMatrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index k = 0; k < dim; ++k) a(i, k) = Complex(gauss(rng), gauss(rng));
  return 0.5 * (a - a.adjoint().eval());
}

void validate_spin_algebra(ReportBuilder& out, std::mt19937_64& rng) {
  for (double j : {0.5, 1.0}) {
    const std::string tag = j == 0.5 ? "j_half" : "j_one";
    const SpinOperatorSet ops = make_spin_operators(j);
    const Complex i(0.0, 1.0);

    const double closure =
        std::max({(commutator(ops.s1, ops.s2) - i * ops.s3).cwiseAbs().maxCoeff(),
                  (commutator(ops.s2, ops.s3) - i * ops.s1).cwiseAbs().maxCoeff(),
                  (commutator(ops.s3, ops.s1) - i * ops.s2).cwiseAbs().maxCoeff()});
    out.add("spin.su2_closure." + tag, 1e-12, closure);

    const OperatorMatrix casimir = ops.s1 * ops.s1 + ops.s2 * ops.s2 + ops.s3 * ops.s3;
    out.add("spin.casimir." + tag, 1e-12,
            (casimir - j * (j + 1.0) * OperatorMatrix::Identity(ops.dim, ops.dim))
                .cwiseAbs()
                .maxCoeff());

    out.add("spin.ladder_composition." + tag, 0.0,
            std::max((ops.s_plus - (ops.s1 + i * ops.s2)).cwiseAbs().maxCoeff(),
                     (ops.s_minus - (ops.s1 - i * ops.s2)).cwiseAbs().maxCoeff()));

    double identity_defect = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::Vector3d a = random_unit_vector(rng);
      const Eigen::Vector3d b = random_unit_vector(rng);
      const OperatorMatrix lhs = commutator(dot_with_spin(a, ops), dot_with_spin(b, ops));
      const Eigen::Vector3d cross = a.cross(b);
      const OperatorMatrix rhs =
          i * (cross.x() * ops.s1 + cross.y() * ops.s2 + cross.z() * ops.s3);
      identity_defect = std::max(identity_defect, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    out.add("spin.vector_operator_identity." + tag, 1e-12, identity_defect);
  }

  double exp_unitarity = 0.0;
  double exp_inverse = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const OperatorMatrix a = random_anti_hermitian(rng, 3, 1.5);
    const OperatorMatrix e = matrix_exponential(a);
    exp_unitarity = std::max(exp_unitarity, unitarity_defect(e));
    exp_inverse = std::max(
        exp_inverse,
        (e * matrix_exponential((-a).eval()) - OperatorMatrix::Identity(3, 3)).norm());
  }
  out.add("spin.exponential_unitarity", 1e-12, exp_unitarity);
  out.add("spin.exponential_inverse", 1e-12, exp_inverse);
}

void validate_evolution(ReportBuilder& out, std::mt19937_64& rng, const RunConfig& cfg) {
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phi_dist(-2.0 * kPi, 2.0 * kPi);

  for (double j : {0.5, 1.0}) {
    const std::string tag = j == 0.5 ? "j_half" : "j_one";
    const SpinOperatorSet ops = make_spin_operators(j);
    double unitarity = 0.0;
    double rotation = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = theta_dist(rng);
      const double phi = phi_dist(rng);
      const OperatorMatrix v = unitary_V(theta, phi, ops);
      unitarity = std::max(unitarity, unitarity_defect(v));
      const OperatorMatrix rotated = v * ops.s3 * v.adjoint();
      const OperatorMatrix target = dot_with_spin(tangent_direction(theta, phi).vec(), ops);
      rotation = std::max(rotation, (rotated - target).cwiseAbs().maxCoeff());
    }
    out.add("evolution.unitary_v_unitarity." + tag, 1e-12, unitarity);
    out.add("evolution.wigner_rotation." + tag, 1e-10, rotation);
  }

  {
    const SpinOperatorSet ops = make_spin_operators(0.5);
    double defect = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = theta_dist(rng);
      const double phi = phi_dist(rng);
      const OperatorMatrix v = unitary_V(theta, phi, ops);
      const Complex up_plus = std::cos(theta / 2.0);
      const Complex up_minus = std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0);
      defect = std::max({defect, std::abs(v(0, 0) - up_plus), std::abs(v(1, 0) - up_minus),
                         std::abs(v(0, 1) + std::conj(up_minus)), std::abs(v(1, 1) - up_plus)});
    }
    out.add("evolution.rotation_form_j_half", 1e-12, defect);
  }

  {
    const SpinOperatorSet ops = make_spin_operators(1.0);
    const double theta = helix_polar_angle(helix_from(cfg));
    const PathSchedule cycle = PathSchedule::parametric(theta, 1.0, 0.0, 1.0, 2.0 * kPi);
    const double expected = -2.0 * kPi * (1.0 - std::cos(theta));
    out.add("evolution.geometric_closed_form", 1e-8,
            std::abs(geometric_phase(cycle, +1.0, ops) - expected));

    const PathSchedule still = PathSchedule::parametric(0.0, 0.0, 0.0, 1.0, 1.0);
    const StateVector psi = integrate_schrodinger(still, ops.eigenstate(1.0), ops, 2000);
    const StateVector expected_state =
        std::exp(Complex(0.0, -1.0)) * StateVector(ops.eigenstate(1.0));
    out.add("evolution.stationary_state", 1e-10, (psi - expected_state).norm());

    const ClassicalFieldVector g0{Eigen::Vector3cd(Complex(1.0, 0.0), Complex(0.4, 0.3),
                                                   Complex(0.0, 0.2)),
                                  2e8};
    out.add("evolution.lvn_residual_static", 1e-8, lvn_residual(still, g0, ops, 10000));
  }
}

void validate_fock(ReportBuilder& out, const RunConfig& cfg) {
  const int n_max = std::min(cfg.simulation.n_max, 30);
  const TwoModeFock fock = build_fock(n_max);
  const CircularModes circ = circular_transform(fock);
  const OperatorMatrix s3 = spin3_operator(fock);

  std::vector<Eigen::Index> below_cutoff;
  for (int n1 = 0; n1 <= n_max; ++n1)
    for (int n2 = 0; n2 <= n_max; ++n2)
      if (n1 + n2 < n_max) below_cutoff.push_back(fock.index_of(n1, n2));

  auto subspace_defect = [&](const OperatorMatrix& m) {
    double worst = 0.0;
    for (Eigen::Index row : below_cutoff)
      for (Eigen::Index col : below_cutoff) worst = std::max(worst, std::abs(m(row, col)));
    return worst;
  };

  const OperatorMatrix number_form =
      circ.a_right_dag * circ.a_right - circ.a_left_dag * circ.a_left;
  out.add("fock.spin3_forms_agree", 1e-12, subspace_defect(s3 - number_form));

  const OperatorMatrix commutator_r =
      circ.a_right * circ.a_right_dag - circ.a_right_dag * circ.a_right;
  out.add("fock.circular_commutator", 1e-12,
          subspace_defect(commutator_r - OperatorMatrix::Identity(fock.dim, fock.dim)));

  double eigen_defect = 0.0;
  const int n_states = std::min(10, n_max);
  for (int n_left = 0; n_left <= n_states; ++n_left)
    for (int n_right = 0; n_left + n_right <= n_states; ++n_right) {
      const StateVector state = circular_number_state(fock, circ, n_left, n_right);
      const double eigenvalue = static_cast<double>(n_right - n_left);
      eigen_defect =
          std::max(eigen_defect, (s3 * state - eigenvalue * state).cwiseAbs().maxCoeff());
    }
  out.add("fock.spin3_circular_eigenvalues", 1e-10, eigen_defect);

  double cancellation = 0.0;
  for (int k = 0; k < 100; ++k)
    cancellation = std::max(cancellation, std::abs(vacuum_cancellation(kPi * k / 99.0)));
  out.add("fock.vacuum_cancellation_sweep", 0.0, cancellation);

  double hannay_defect = 0.0;
  const double theta_cfg = helix_polar_angle(helix_from(cfg));
  for (double theta : {theta_cfg, kPi / 3.0, kPi / 2.0, 2.5}) {
    for (Handedness h : {Handedness::left, Handedness::right}) {
      const double sign = h == Handedness::left ? 1.0 : -1.0;
      const double gamma0_ref = sign * kPi * (1.0 - std::cos(theta));
      const double delta_ref = -sign * 2.0 * kPi * (1.0 - std::cos(theta));
      for (int n = 0; n <= 10; ++n) {
        const HannayCheck check = hannay_relation_check(h, n, theta);
        hannay_defect = std::max({hannay_defect, std::abs(check.gamma0 - gamma0_ref),
                                  std::abs(check.delta_theta - delta_ref)});
      }
    }
  }
  out.add("fock.hannay_gamma0", 1e-12, hannay_defect);

  double consistency = 0.0;
  for (Handedness h : {Handedness::left, Handedness::right}) {
    const double first_quantized =
        (h == Handedness::right ? -1.0 : 1.0) * 2.0 * kPi * (1.0 - std::cos(theta_cfg));
    for (int n = 0; n <= 10; ++n) {
      const double stripped = second_quantized_berry_phase(h, n, theta_cfg) -
                              second_quantized_berry_phase(h, 0, theta_cfg);
      consistency = std::max(consistency, std::abs(stripped - n * first_quantized));
    }
  }
  out.add("fock.first_second_consistency", 1e-12, consistency);
}

void validate_coherent(ReportBuilder& out, const RunConfig& cfg) {
  const double theta = helix_polar_angle(helix_from(cfg));
  const int n_max = std::max(2, std::min(cfg.simulation.n_max, 30));
  const PhaseTable table = berry_phase_table(Handedness::right, theta, 1.0, 2.0 * kPi, n_max);

  double uniformity = 0.0;
  const PhaseShift shift = phase_shift_delta(table);
  for (std::size_t n = 1; n + 1 < table.size(); ++n) {
    uniformity = std::max(
        uniformity,
        std::abs((table[n + 1].geometric - table[n].geometric) - shift.delta_geometric));
    uniformity = std::max(
        uniformity,
        std::abs((table[n + 1].combined() - table[n].combined()) - shift.delta_combined));
  }
  out.add("coherent.delta_uniformity", 1e-12, uniformity);
  out.add("coherent.delta_geometric_closed_form", 1e-12,
          std::abs(shift.delta_geometric - (-2.0 * kPi * (1.0 - std::cos(theta)))));

  PhaseTable no_offset(table.size());
  for (std::size_t n = 0; n < table.size(); ++n) {
    no_offset[n].geometric =
        -2.0 * kPi * (1.0 - std::cos(theta)) * static_cast<double>(n);
    no_offset[n].dynamical = table[n].dynamical;
  }
  out.add("coherent.vacuum_offset_cancels_in_delta", 1e-12,
          std::abs(phase_shift_delta(no_offset).delta_geometric - shift.delta_geometric));

  PhaseTable geometric_only(table.size());
  for (std::size_t n = 0; n < table.size(); ++n) geometric_only[n].geometric = table[n].geometric;
  const PhasedCoherentState state =
      build_phased_coherent(Complex(1.0, 0.0), geometric_only, n_max);
  const double contraction = quadrature_expectation(state);
  const double closed = quadrature_closed_form(
      Complex(1.0, 0.0), phase_shift_delta(geometric_only).delta_combined);
  out.add("coherent.quadrature_consistency", 1e-8, std::abs(contraction - closed));

  // Imaginary residue of the raw contraction, via an independent ladder.
  OperatorMatrix a = OperatorMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const OperatorMatrix q = (a + a.adjoint().eval()) / std::sqrt(2.0);
  const Complex raw = (state.amplitudes().adjoint() * (q * state.amplitudes()))(0, 0);
  out.add("coherent.quadrature_real", 1e-12, std::abs(raw.imag()));
}

void validate_chiral(ReportBuilder& out, std::mt19937_64& rng, const RunConfig& cfg) {
  const HelixSpec helix = helix_from(cfg);
  const double arc = precession_cycle_length(helix);

  double residual = 0.0;
  double root_difference = 0.0;
  for (int ie = 0; ie < 10; ++ie) {
    const double epsilon = 1.0 + 1.5 * ie;
    for (int iz = 0; iz < 10; ++iz) {
      const double zeta = -3e-4 + 6e-4 * iz / 9.0;
      const ChiralMedium medium(epsilon, zeta);
      for (int iw = 0; iw < 10; ++iw) {
        const double omega = 1e13 * std::pow(10.0, 3.0 * iw / 9.0);
        const DispersionResult d = dispersion(omega, medium);
        const double scale = medium.epsilon() * constants::vacuum_permittivity *
                             constants::vacuum_permeability * omega * omega;
        for (double k : {d.k_right, d.k_left}) {
          const double sign = k == d.k_right ? 1.0 : -1.0;
          const double quad =
              k * k + sign * 2.0 * zeta * constants::vacuum_permeability * omega * k - scale;
          residual = std::max(residual, std::abs(quad) / scale);
        }
        root_difference = std::max(
            root_difference, std::abs((d.k_right - d.k_left) - d.delta_k) /
                                 (std::abs(d.k_right) + std::abs(d.k_left)));
      }
    }
  }
  out.add("chiral.dispersion_residual", 1e-12, residual);
  out.add("chiral.delta_k_consistency", 1e-14, root_difference);

  {
    const double zeta = cfg.medium.zeta != 0.0 ? cfg.medium.zeta : 1e-5;
    const ChiralMedium medium(cfg.medium.epsilon, zeta);
    const double reference = -2.0 * zeta * constants::vacuum_permeability * arc;
    double deviation = 0.0;
    for (int iw = 0; iw <= 12; ++iw) {
      const double omega = 1e13 * std::pow(10.0, 3.0 * iw / 12.0);
      const double delta_t = arc * dispersion(omega, medium).delta_k / omega;
      deviation = std::max(deviation, relative_difference(delta_t, reference));
    }
    out.add("chiral.delta_t_omega_independence", 1e-12, deviation);

    const PrecessionSplit plus = precession_split(medium, helix);
    const PrecessionSplit minus =
        precession_split(ChiralMedium(cfg.medium.epsilon, -zeta), helix);
    const double odd = std::max(
        {std::abs(plus.delta_omega_first_order + minus.delta_omega_first_order),
         std::abs(plus.delta_omega_exact + minus.delta_omega_exact),
         std::abs(plus.delta_t_first_order + minus.delta_t_first_order),
         std::abs(plus.delta_t_exact + minus.delta_t_exact)});
    out.add("chiral.split_odd_in_zeta", 0.0, odd);
  }

  {
    const ChiralMedium probe(cfg.medium.epsilon, 0.005 * ChiralMedium(cfg.medium.epsilon, 0.0).zeta_scale());
    const PrecessionSplit split = precession_split(probe, helix);
    const double bound = 10.0 * probe.zeta() * probe.zeta() * constants::vacuum_permeability /
                         (probe.epsilon() * constants::vacuum_permittivity);
    out.add("chiral.delta_omega_first_order_accuracy", bound,
            relative_difference(split.delta_omega_first_order, split.delta_omega_exact));
  }

  std::uniform_real_distribution<double> amp(-2.0, 2.0);
  std::uniform_real_distribution<double> freq(1e13, 1e16);
  double energy_defect = 0.0;
  const double scale = ChiralMedium(cfg.medium.epsilon, 0.0).zeta_scale();
  for (double zeta : {0.0, 0.001 * scale, 0.01 * scale}) {
    const ChiralMedium medium(cfg.medium.epsilon, zeta);
    for (int trial = 0; trial < 100; ++trial) {
      ModeAmplitudeSet modes;
      modes.volume = 1e-6;
      const int count = 1 + static_cast<int>(rng() % 10);
      for (int i = 0; i < count; ++i)
        modes.modes.push_back({freq(rng), Complex(amp(rng), amp(rng))});
      const EnergyForms w = field_energy_forms(modes, medium);
      energy_defect = std::max(energy_defect, relative_difference(w.direct, w.canonical));
    }
  }
  out.add("chiral.energy_forms_equal", 1e-12, energy_defect);
}

}  // namespace

ValidationReport run_validate(const RunConfig& cfg) {
  ValidationReport report;
  ReportBuilder out(report);
  std::mt19937_64 rng(0x5eed5eedULL);

  validate_spin_algebra(out, rng);
  validate_evolution(out, rng, cfg);
  validate_fock(out, cfg);
  validate_coherent(out, cfg);
  validate_chiral(out, rng, cfg);
  return report;
}

std::string to_json_text(const ValidationReport& report, const RunConfig& cfg, long long seed) {
  nlohmann::json doc;
  doc["meta"] = {{"subcommand", "validate"},
                 {"version", version_string},
                 {"config_hash", config_hash(cfg)},
                 {"seed", seed}};
  doc["all_pass"] = report.all_pass();
  doc["invariants"] = nlohmann::json::array();
  for (const ValidationItem& item : report.items)
    doc["invariants"].push_back({{"invariant", item.invariant},
                                 {"tolerance", item.tolerance},
                                 {"measured", item.measured},
                                 {"pass", item.pass}});
  return doc.dump(2) + "\n";
}

}  // namespace coilphase
