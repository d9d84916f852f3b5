#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "coilphase/evolution.hpp"

using namespace coilphase;

namespace {

constexpr double kPi = std::numbers::pi;

PathSchedule one_cycle_helix(double theta, double ratio) {
  const double omega_prec = 1.0;
  return PathSchedule::parametric(theta, omega_prec, 0.0, ratio * omega_prec,
                                  2.0 * kPi / omega_prec);
}

}  // namespace

TEST_CASE("unitary_V at theta = 0 is the identity") {
  for (double j : {0.5, 1.0}) {
    const SpinOperatorSet ops = make_spin_operators(j);
    const OperatorMatrix v = unitary_V(0.0, 1.3, ops);
    CHECK((v - OperatorMatrix::Identity(ops.dim, ops.dim)).cwiseAbs().maxCoeff() < 1e-15);
  }
  CHECK_THROWS_AS(unitary_V(-0.1, 0.0, make_spin_operators(1.0)), std::invalid_argument);
}

TEST_CASE("unitary_V matches the spin-1/2 rotation closed form") {
  const SpinOperatorSet ops = make_spin_operators(0.5);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phi_dist(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = theta_dist(rng);
    const double phi = phi_dist(rng);
    const OperatorMatrix v = unitary_V(theta, phi, ops);
    // V|+> = cos(theta/2)|+> + e^{i phi} sin(theta/2)|->
    CHECK(std::abs(v(0, 0) - Complex(std::cos(theta / 2.0), 0.0)) < 1e-12);
    CHECK(std::abs(v(1, 0) - std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0)) < 1e-12);
    // V|-> = cos(theta/2)|-> - e^{-i phi} sin(theta/2)|+>
    CHECK(std::abs(v(0, 1) + std::exp(Complex(0.0, -phi)) * std::sin(theta / 2.0)) < 1e-12);
    CHECK(std::abs(v(1, 1) - Complex(std::cos(theta / 2.0), 0.0)) < 1e-12);
  }
}

TEST_CASE("unitary_V is unitary and rotates s3 onto the tangent direction") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phi_dist(-2.0 * kPi, 2.0 * kPi);
  for (double j : {0.5, 1.0}) {
    const SpinOperatorSet ops = make_spin_operators(j);
    double unit_defect = 0.0;
    double rot_defect = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = theta_dist(rng);
      const double phi = phi_dist(rng);
      const OperatorMatrix v = unitary_V(theta, phi, ops);
      unit_defect = std::max(unit_defect, unitarity_defect(v));
      const OperatorMatrix target = dot_with_spin(tangent_direction(theta, phi).vec(), ops);
      rot_defect =
          std::max(rot_defect, (v * ops.s3 * v.adjoint() - target).cwiseAbs().maxCoeff());
    }
    CHECK(unit_defect < 1e-12);
    CHECK(rot_defect < 1e-10);
  }
}

TEST_CASE("V|m> is an eigenstate of n.S with eigenvalue m") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> theta_dist(0.0, kPi);
  std::uniform_real_distribution<double> phi_dist(-2.0 * kPi, 2.0 * kPi);
  for (int trial = 0; trial < 50; ++trial) {
    const double theta = theta_dist(rng);
    const double phi = phi_dist(rng);
    const OperatorMatrix v = unitary_V(theta, phi, ops);
    const OperatorMatrix h = dot_with_spin(tangent_direction(theta, phi).vec(), ops);
    for (double m : {1.0, 0.0, -1.0}) {
      const StateVector state = v.col(ops.index_of(m));
      CHECK((h * state - m * state).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("dynamical phase equals m omega T") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule schedule = PathSchedule::parametric(0.6, 2.0 * kPi / 1e-3, 0.0, 1e6, 1e-3);

  CHECK(std::abs(dynamical_phase(schedule, 0.0, ops)) < 1e-9);
  const double plus = dynamical_phase(schedule, 1.0, ops);
  CHECK(std::abs(plus - 1e3) < 1e-8);
  CHECK(std::abs(dynamical_phase(schedule, -1.0, ops) + plus) < 1e-8);
  CHECK_THROWS_AS(dynamical_phase(schedule, 0.5, ops), std::invalid_argument);
}

TEST_CASE("dynamical phase is not reparameterization invariant") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule fast = PathSchedule::parametric(0.6, 2.0, 0.0, 1e3, kPi);
  const PathSchedule slow = PathSchedule::parametric(0.6, 1.0, 0.0, 1e3, 2.0 * kPi);
  // Same (theta, phi) path, different duration: the energy-time phase differs.
  CHECK(std::abs(dynamical_phase(fast, 1.0, ops) - dynamical_phase(slow, 1.0, ops)) > 1.0);
  // While the geometric phase does not change.
  CHECK(std::abs(geometric_phase(fast, 1.0, ops) - geometric_phase(slow, 1.0, ops)) < 1e-10);
}

TEST_CASE("geometric phase closed form on the cyclic helix") {
  const SpinOperatorSet ops = make_spin_operators(1.0);

  CHECK(geometric_phase(one_cycle_helix(0.0, 100.0), 1.0, ops) == 0.0);

  const double gamma = geometric_phase(one_cycle_helix(kPi / 3.0, 100.0), 1.0, ops);
  CHECK(std::abs(gamma - (-kPi)) < 1e-12);

  for (double theta : {0.1, 0.7, kPi / 2.0, 2.2, kPi}) {
    for (double m : {1.0, 0.0, -1.0}) {
      const double expected = -2.0 * kPi * (1.0 - std::cos(theta)) * m;
      CHECK(std::abs(geometric_phase(one_cycle_helix(theta, 100.0), m, ops) - expected) <
            1e-12);
    }
  }
}

TEST_CASE("geometric phase is antisymmetric in m and reparameterization invariant") {
  const SpinOperatorSet ops = make_spin_operators(1.0);

  std::vector<PathSample> samples;
  for (int k = 0; k <= 40; ++k) {
    const double u = static_cast<double>(k) / 40.0;
    samples.push_back({u * u * 3.0 + 0.05 * u, 0.4 + 0.3 * std::sin(kPi * u), 5.0 * u});
  }
  const PathSchedule path = PathSchedule::sampled(samples, 1e5);

  const double plus = geometric_phase(path, 1.0, ops);
  const double minus = geometric_phase(path, -1.0, ops);
  CHECK(plus == -minus);

  // Same polyline in (theta, phi), walked with a different clock.
  std::vector<PathSample> retimed = samples;
  for (std::size_t k = 0; k < retimed.size(); ++k)
    retimed[k].t = std::pow(static_cast<double>(k) + 1.0, 1.7);
  CHECK(std::abs(geometric_phase(PathSchedule::sampled(retimed, 1e5), 1.0, ops) - plus) <
        1e-14);
}

TEST_CASE("sampled helix quadrature matches the parametric one") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const double theta = kPi / 3.0;
  const PathSchedule parametric = one_cycle_helix(theta, 100.0);

  // Non-uniform sampling of the same constant-theta path.
  std::vector<PathSample> samples;
  double t = 0.0;
  int k = 0;
  while (t < 2.0 * kPi) {
    samples.push_back({t, theta, t});
    t += (k % 3 == 0) ? 0.009 : 0.173;
    ++k;
  }
  samples.push_back({2.0 * kPi, theta, 2.0 * kPi});
  const PathSchedule sampled = PathSchedule::sampled(samples, 100.0);

  CHECK(std::abs(geometric_phase(sampled, 1.0, ops) - geometric_phase(parametric, 1.0, ops)) <
        1e-8);
  CHECK(std::abs(dynamical_phase(sampled, 1.0, ops) - dynamical_phase(parametric, 1.0, ops)) <
        1e-6);
}

TEST_CASE("integrate_schrodinger keeps stationary states stationary") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule still = PathSchedule::parametric(0.0, 0.0, 0.0, 1.0, 1.0);
  for (double m : {1.0, 0.0, -1.0}) {
    const StateVector final_state = integrate_schrodinger(still, ops.eigenstate(m), ops, 2000);
    const StateVector expected = std::exp(Complex(0.0, -m)) * StateVector(ops.eigenstate(m));
    CHECK((final_state - expected).norm() < 1e-10);
  }
}

TEST_CASE("integrate_schrodinger validates inputs and preserves the norm") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule schedule = one_cycle_helix(0.8, 50.0);

  CHECK_THROWS_AS(integrate_schrodinger(schedule, ops.eigenstate(1.0), ops, 0),
                  std::invalid_argument);
  StateVector unnormalized = ops.eigenstate(1.0);
  unnormalized *= 2.0;
  CHECK_THROWS_AS(integrate_schrodinger(schedule, unnormalized, ops, 100),
                  std::invalid_argument);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector psi(3);
  for (int i = 0; i < 3; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
  psi /= psi.norm();
  const long steps = recommended_step_count(schedule, ops);
  const StateVector out = integrate_schrodinger(schedule, psi, ops, steps);
  CHECK(std::abs(out.norm() - 1.0) < 1e-10);
}

TEST_CASE("integrate_schrodinger rejects steps that are far too coarse") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  // omega T = 5000 over 100 steps: 50 radians of phase per step.
  const PathSchedule schedule = PathSchedule::parametric(0.7, 1.0, 0.0, 5000.0, 1.0);
  CHECK_THROWS_AS(integrate_schrodinger(schedule, ops.eigenstate(1.0), ops, 100),
                  StepSizeError);
}

TEST_CASE("adiabatic transport follows the instantaneous eigenstate") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const double theta = kPi / 3.0;
  const PathSchedule schedule = one_cycle_helix(theta, 1000.0);

  const StateVector psi0 = unitary_V(theta, 0.0, ops) * ops.eigenstate(1.0);
  const long steps = recommended_step_count(schedule, ops);
  const StateVector final_state = integrate_schrodinger(schedule, psi0, ops, steps);

  const StateVector reference =
      unitary_V(theta, 2.0 * kPi, ops) * ops.eigenstate(1.0);
  Complex overlap(0.0, 0.0);
  for (int i = 0; i < 3; ++i) overlap += std::conj(reference(i)) * final_state(i);
  CHECK(std::abs(overlap) > 0.999);
}

TEST_CASE("extract_phases on a straight fiber gives zero geometric phase") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule schedule = PathSchedule::parametric(0.0, 1.0, 0.0, 200.0, 2.0 * kPi);
  const PhaseExtraction result = extract_phases(schedule, 1.0, ops, 10000);
  CHECK(std::abs(result.phases.geometric) < 1e-8);
  CHECK(std::abs(result.phases.total - (result.phases.geometric - result.phases.dynamical)) <
        1e-12);
  CHECK(result.max_increment < kPi / 2.0);
}

TEST_CASE("extract_phases recovers the cyclic Berry phase adiabatically") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const double theta = kPi / 3.0;
  const PhaseExtraction result = extract_phases(one_cycle_helix(theta, 1000.0), 1.0, ops, 10000);
  CHECK(std::abs(result.phases.geometric - (-kPi)) < 5e-2);
  CHECK(std::abs(result.norm_drift) < 1e-9);
}

TEST_CASE("extraction error shrinks roughly linearly with the adiabatic ratio") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const double theta = kPi / 3.0;
  const double closed = -kPi;
  const double error_200 =
      std::abs(extract_phases(one_cycle_helix(theta, 200.0), 1.0, ops, 1000).phases.geometric -
               closed);
  const double error_400 =
      std::abs(extract_phases(one_cycle_helix(theta, 400.0), 1.0, ops, 1000).phases.geometric -
               closed);
  CHECK(error_400 < error_200);
  const double ratio = error_200 / error_400;
  CHECK(ratio > 1.2);
  CHECK(ratio < 3.5);
}

TEST_CASE("extract_phases accepts an eigenstate vector and rejects superpositions") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule schedule = one_cycle_helix(0.9, 300.0);

  StateVector phased = ops.eigenstate(-1.0);
  phased *= std::exp(Complex(0.0, 1.2));  // global phase must not matter
  const PhaseExtraction by_state = extract_phases(schedule, phased, ops, 2000);
  const PhaseExtraction by_index = extract_phases(schedule, -1.0, ops, 2000);
  CHECK(std::abs(by_state.phases.geometric - by_index.phases.geometric) < 1e-12);

  StateVector mixed(3);
  mixed << Complex(std::sqrt(0.5), 0.0), Complex(std::sqrt(0.5), 0.0), Complex(0.0, 0.0);
  CHECK_THROWS_AS(extract_phases(schedule, mixed, ops, 2000), std::invalid_argument);
}

TEST_CASE("lvn residual vanishes to second order for a static direction") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule still = PathSchedule::parametric(0.0, 0.0, 0.0, 1.0, 1.0);
  const ClassicalFieldVector g0{
      Eigen::Vector3cd(Complex(1.0, 0.0), Complex(0.4, 0.3), Complex(0.0, 0.2)), 2e8};

  const double residual_10k = lvn_residual(still, g0, ops, 10000);
  CHECK(residual_10k < 1e-8);

  const double residual_5k = lvn_residual(still, g0, ops, 5000);
  const double ratio = residual_5k / residual_10k;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("lvn residual sits at the floor when G is parallel to the propagation axis") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule still = PathSchedule::parametric(0.0, 0.0, 0.0, 1.0, 1.0);
  const ClassicalFieldVector g0{Eigen::Vector3cd(Complex(0.0, 0.0), Complex(0.0, 0.0),
                                                 Complex(0.7, 0.1)),
                                2e8};
  CHECK(lvn_residual(still, g0, ops, 1000) < 1e-12);
}

TEST_CASE("lvn residual stays small on a precessing schedule") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule helix = PathSchedule::parametric(0.5, 2.0, 0.0, 20.0, 1.0);
  const ClassicalFieldVector g0{
      Eigen::Vector3cd(Complex(0.6, 0.0), Complex(0.0, 0.5), Complex(0.2, 0.0)), 2e8};
  const double coarse = lvn_residual(helix, g0, ops, 4000);
  const double fine = lvn_residual(helix, g0, ops, 8000);
  CHECK(fine < coarse);
  CHECK(fine < 1e-4);
}

TEST_CASE("recommended_step_count respects the request and the drift budget") {
  const SpinOperatorSet ops = make_spin_operators(1.0);
  const PathSchedule schedule = one_cycle_helix(0.7, 1000.0);
  CHECK(recommended_step_count(schedule, ops, 5000000) == 5000000);
  const long automatic = recommended_step_count(schedule, ops);
  CHECK(automatic >= 64);
  // More optical phase demands more steps.
  CHECK(recommended_step_count(one_cycle_helix(0.7, 10000.0), ops) > automatic);
}
