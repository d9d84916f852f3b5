#include "coilphase/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace coilphase {

namespace {

constexpr double kPi = std::numbers::pi;

// Contract limits for the fixed-step integrator.
constexpr double kPerStepDriftLimit = 1e-12;
constexpr double kRunDriftLimit = 1e-9;
// Step-sizing targets, kept below the limits. A degree-4 Taylor step on an
// eigenphase x = lambda*dt loses |psi| by x^6/144 per step, which fixes the
// admissible x for a given budget.
constexpr double kPerStepDriftBudget = 1e-13;
constexpr double kRunDriftBudget = 2.5e-10;

void require_polar_angle(double theta, const char* where) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::invalid_argument(std::string(where) + ": polar angle must lie in [0, pi]");
}

// Signals that the overlap stride was too coarse; extract_phases retries.
struct IncrementTooLarge {
  double value = 0.0;
};

template <int N>
using MatT = Eigen::Matrix<Complex, N, N>;
template <int N>
using VecT = Eigen::Matrix<Complex, N, 1>;

/// Assembles H(t) = omega * n(t).S into preallocated storage.
template <int N>
struct HamiltonianEvaluator {
  const PathSchedule* schedule = nullptr;
  MatT<N> w1, w2, w3;

  void init(const PathSchedule& sch, const SpinOperatorSet& ops) {
    schedule = &sch;
    w1 = sch.omega() * ops.s1;
    w2 = sch.omega() * ops.s2;
    w3 = sch.omega() * ops.s3;
  }

  void assemble(double t, MatT<N>& h) const {
    const double theta = schedule->theta(t);
    const double phi = schedule->phi(t);
    const double st = std::sin(theta);
    h = (st * std::cos(phi)) * w1 + (st * std::sin(phi)) * w2 + std::cos(theta) * w3;
  }
};

struct DriftStats {
  double accumulated = 0.0;
  double max_per_step = 0.0;
};

/// Fixed-step RK4 on i dpsi/dt = H(t) psi with per-step renormalisation.
/// `visit(step, t, psi)` fires at step 0, every `stride` steps, and at the
/// final step.
template <int N, typename Visitor>
DriftStats run_rk4(const PathSchedule& sch, const SpinOperatorSet& ops, long steps,
                   VecT<N>& psi, long stride, Visitor&& visit) {
  HamiltonianEvaluator<N> ham;
  ham.init(sch, ops);

  const Eigen::Index dim = psi.size();
  MatT<N> h_begin(dim, dim), h_mid(dim, dim), h_end(dim, dim);
  VecT<N> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  const double t0 = sch.start_time();
  const double dt = sch.duration() / static_cast<double>(steps);
  const Complex minus_i(0.0, -1.0);

  DriftStats drift;
  ham.assemble(t0, h_begin);
  visit(0L, t0, psi);

  for (long k = 0; k < steps; ++k) {
    const double t = t0 + dt * static_cast<double>(k);
    const double t_end = t0 + dt * static_cast<double>(k + 1);
    ham.assemble(t + 0.5 * dt, h_mid);
    ham.assemble(t_end, h_end);

    k1.noalias() = h_begin * psi;
    k1 *= minus_i;
    tmp = psi + (0.5 * dt) * k1;
    k2.noalias() = h_mid * tmp;
    k2 *= minus_i;
    tmp = psi + (0.5 * dt) * k2;
    k3.noalias() = h_mid * tmp;
    k3 *= minus_i;
    tmp = psi + dt * k3;
    k4.noalias() = h_end * tmp;
    k4 *= minus_i;
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double norm = psi.norm();
    const double step_drift = norm - 1.0;
    if (std::abs(step_drift) > kPerStepDriftLimit)
      throw StepSizeError("integrate_schrodinger: per-step norm drift " +
                          std::to_string(std::abs(step_drift)) +
                          " exceeds 1e-12; increase the step count");
    drift.accumulated += step_drift;
    drift.max_per_step = std::max(drift.max_per_step, std::abs(step_drift));
    if (std::abs(drift.accumulated) > kRunDriftLimit)
      throw StepSizeError("integrate_schrodinger: accumulated norm drift " +
                          std::to_string(std::abs(drift.accumulated)) +
                          " exceeds 1e-9; increase the step count");
    psi /= norm;

    h_begin = h_end;
    if ((k + 1) % stride == 0 || k + 1 == steps) visit(k + 1, t_end, psi);
  }
  return drift;
}

template <int N>
StateVector integrate_dispatch(const PathSchedule& sch, const StateVector& psi0,
                               const SpinOperatorSet& ops, long steps) {
  VecT<N> psi = psi0;
  run_rk4<N>(sch, ops, steps, psi, steps + 1, [](long, double, const VecT<N>&) {});
  return psi;
}

template <int N>
PhaseExtraction extract_dispatch(const PathSchedule& sch, double m, const SpinOperatorSet& ops,
                                 long requested_steps) {
  const StateVector basis_m = ops.eigenstate(m);

  long steps = recommended_step_count(sch, ops, requested_steps);
  const double t0 = sch.start_time();
  const double duration = sch.duration();

  // Bound on the overlap-phase rate: |d(arg o)/dt| <= |m| (omega + 2 |phi_dot|).
  const double rate =
      std::max(std::abs(m) * (sch.omega() + 2.0 * sch.max_angular_rate()), 1e-30);

  constexpr int kMaxAttempts = 8;
  for (int attempt = 0;; ++attempt) {
    const double dt = duration / static_cast<double>(steps);
    long stride = static_cast<long>(std::floor((kPi / 4.0) / (rate * dt)));
    stride = std::clamp(stride, 1L, std::max(1L, steps / 16));

    VecT<N> psi = unitary_V(sch.theta(t0), sch.phi(t0), ops) * basis_m;

    double total = 0.0;
    double max_increment = 0.0;
    Complex overlap_prev(1.0, 0.0);
    bool first = true;

    auto visit = [&](long /*step*/, double t, const VecT<N>& state) {
      const StateVector reference = unitary_V(sch.theta(t), sch.phi(t), ops) * basis_m;
      Complex overlap(0.0, 0.0);
      for (Eigen::Index i = 0; i < state.size(); ++i)
        overlap += std::conj(reference(i)) * state(i);
      if (first) {
        overlap_prev = overlap;
        first = false;
        return;
      }
      const double increment = std::arg(overlap * std::conj(overlap_prev));
      if (std::abs(increment) >= kPi / 2.0) throw IncrementTooLarge{increment};
      total += increment;
      max_increment = std::max(max_increment, std::abs(increment));
      overlap_prev = overlap;
    };

    try {
      const DriftStats drift = run_rk4<N>(sch, ops, steps, psi, stride, visit);
      PhaseExtraction result;
      result.phases.total = total;
      result.phases.dynamical = dynamical_phase(sch, m, ops);
      result.phases.geometric = total + result.phases.dynamical;
      result.steps_used = steps;
      result.max_increment = max_increment;
      result.norm_drift = drift.accumulated;
      return result;
    } catch (const IncrementTooLarge& e) {
      if (attempt + 1 >= kMaxAttempts)
        throw StepSizeError("extract_phases: overlap increment " + std::to_string(e.value) +
                            " still >= pi/2 after " + std::to_string(kMaxAttempts) +
                            " refinements");
    } catch (const StepSizeError&) {
      if (attempt + 1 >= kMaxAttempts) throw;
    }
    steps *= 2;
  }
}

// Eigen's cross()/dot() conjugate complex operands; spell the real-axis
// products out instead.
Eigen::Vector3cd axis_cross(const Eigen::Vector3d& a, const Eigen::Vector3cd& b) {
  return Eigen::Vector3cd(a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(),
                          a.x() * b.y() - a.y() * b.x());
}

Eigen::Vector3cd rotate_about(const Eigen::Vector3cd& v, const Eigen::Vector3d& axis,
                              double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Complex along = axis.x() * v.x() + axis.y() * v.y() + axis.z() * v.z();
  return c * v + s * axis_cross(axis, v) + (1.0 - c) * along * axis.cast<Complex>();
}

bool finite_vec(const Eigen::Vector3cd& v) {
  for (int i = 0; i < 3; ++i)
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  return true;
}

}  // namespace

OperatorMatrix unitary_V(double theta, double phi, const SpinOperatorSet& ops) {
  require_polar_angle(theta, "unitary_V");
  const Complex coeff = -(theta / 2.0) * std::exp(Complex(0.0, -phi));
  const OperatorMatrix generator = coeff * ops.s_plus - std::conj(coeff) * ops.s_minus;
  return matrix_exponential(generator);
}

double dynamical_phase(const PathSchedule& schedule, double m, const SpinOperatorSet& ops) {
  const Eigen::Index m_index = ops.index_of(m);

  auto integrand = [&](double t) {
    const OperatorMatrix v = unitary_V(schedule.theta(t), schedule.phi(t), ops);
    const StateVector state = v.col(m_index);
    const OperatorMatrix h =
        schedule.omega() * dot_with_spin(schedule.direction(t).vec(), ops);
    return (state.adjoint() * (h * state))(0, 0).real();
  };

  auto simpson = [&](double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    double sum = integrand(a) + integrand(b);
    for (int i = 1; i < intervals; ++i) sum += ((i % 2) ? 4.0 : 2.0) * integrand(a + h * i);
    return sum * h / 3.0;
  };

  if (schedule.parametric_form())
    return simpson(schedule.start_time(), schedule.start_time() + schedule.duration(), 64);

  double total = 0.0;
  const auto& samples = schedule.samples();
  for (std::size_t i = 1; i < samples.size(); ++i)
    total += simpson(samples[i - 1].t, samples[i].t, 8);
  return total;
}

double geometric_phase(const PathSchedule& schedule, double m, const SpinOperatorSet& ops) {
  ops.index_of(m);  // validates m against j

  // Path integral of (1 - cos theta) d phi over the piecewise-linear path;
  // exact per segment, hence independent of the time parameterisation.
  double integral = 0.0;
  if (schedule.parametric_form()) {
    integral = schedule.precession_omega() * schedule.duration() *
               (1.0 - std::cos(schedule.theta0()));
  } else {
    const auto& samples = schedule.samples();
    for (std::size_t i = 1; i < samples.size(); ++i) {
      const double dphi = samples[i].phi - samples[i - 1].phi;
      const double th0 = samples[i - 1].theta;
      const double th1 = samples[i].theta;
      double mean;  // segment average of (1 - cos theta)
      if (th1 == th0) {
        mean = 1.0 - std::cos(th0);
      } else {
        const double half = 0.5 * (th1 - th0);
        mean = 1.0 - std::cos(0.5 * (th0 + th1)) * (std::sin(half) / half);
      }
      integral += dphi * mean;
    }
  }
  return -m * integral;
}

long recommended_step_count(const PathSchedule& schedule, const SpinOperatorSet& ops,
                            long requested) {
  const double top_rate = ops.j * schedule.omega() + schedule.max_angular_rate();
  const double total_phase = top_rate * schedule.duration();
  double x = 0.5;
  if (total_phase > 0.0) {
    const double x_run = std::pow(144.0 * kRunDriftBudget / total_phase, 0.2);
    const double x_step = std::pow(144.0 * kPerStepDriftBudget, 1.0 / 6.0);
    x = std::min({0.5, x_run, x_step});
  }
  const double needed = std::ceil(total_phase / x);
  long steps = needed < 2e18 ? static_cast<long>(needed) : std::numeric_limits<long>::max() / 4;
  return std::max({requested, steps, 64L});
}

StateVector integrate_schrodinger(const PathSchedule& schedule, const StateVector& psi0,
                                  const SpinOperatorSet& ops, long steps) {
  if (steps < 1) throw std::invalid_argument("integrate_schrodinger: steps must be positive");
  if (psi0.size() != ops.dim)
    throw std::invalid_argument("integrate_schrodinger: state dimension does not match 2j+1");
  if (!all_finite(psi0) || std::abs(psi0.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("integrate_schrodinger: psi0 must be normalized");

  switch (ops.dim) {
    case 2:
      return integrate_dispatch<2>(schedule, psi0, ops, steps);
    case 3:
      return integrate_dispatch<3>(schedule, psi0, ops, steps);
    default:
      return integrate_dispatch<Eigen::Dynamic>(schedule, psi0, ops, steps);
  }
}

PhaseExtraction extract_phases(const PathSchedule& schedule, double m,
                               const SpinOperatorSet& ops, long steps) {
  switch (ops.dim) {
    case 2:
      return extract_dispatch<2>(schedule, m, ops, steps);
    case 3:
      return extract_dispatch<3>(schedule, m, ops, steps);
    default:
      return extract_dispatch<Eigen::Dynamic>(schedule, m, ops, steps);
  }
}

PhaseExtraction extract_phases(const PathSchedule& schedule, const StateVector& psi0,
                               const SpinOperatorSet& ops, long steps) {
  if (psi0.size() != ops.dim)
    throw std::invalid_argument("extract_phases: state dimension does not match 2j+1");
  Eigen::Index best = 0;
  double best_mod = 0.0;
  for (Eigen::Index i = 0; i < psi0.size(); ++i) {
    const double mod = std::abs(psi0(i));
    if (mod > best_mod) {
      best_mod = mod;
      best = i;
    }
  }
  if (best_mod < 1.0 - 1e-10)
    throw std::invalid_argument(
        "extract_phases: psi0 must be an s3 eigenstate (up to a global phase)");
  const double m = ops.j - static_cast<double>(best);
  return extract_phases(schedule, m, ops, steps);
}

double lvn_residual(const PathSchedule& schedule, const ClassicalFieldVector& g0,
                    const SpinOperatorSet& ops, long steps) {
  if (steps < 2) throw std::invalid_argument("lvn_residual: needs at least 2 steps");
  if (!finite_vec(g0.g)) throw std::invalid_argument("lvn_residual: field vector must be finite");
  if (!(g0.phase_velocity > 0.0) || !std::isfinite(g0.phase_velocity))
    throw std::invalid_argument("lvn_residual: phase velocity must be positive");

  const double omega = schedule.omega();
  const double t0 = schedule.start_time();
  const double dt = schedule.duration() / static_cast<double>(steps);

  std::vector<Eigen::Vector3cd> g(static_cast<std::size_t>(steps) + 1);
  g[0] = g0.g;
  if (schedule.static_direction()) {
    const Eigen::Vector3d axis = schedule.direction(t0).vec();
    for (long k = 1; k <= steps; ++k)
      g[k] = rotate_about(g0.g, axis, omega * dt * static_cast<double>(k));
  } else {
    auto derivative = [&](double t, const Eigen::Vector3cd& v) -> Eigen::Vector3cd {
      return omega * schedule.direction(t).vec().cast<Complex>().cross(v);
    };
    for (long k = 0; k < steps; ++k) {
      const double t = t0 + dt * static_cast<double>(k);
      const Eigen::Vector3cd k1 = derivative(t, g[k]);
      const Eigen::Vector3cd k2 = derivative(t + 0.5 * dt, g[k] + 0.5 * dt * k1);
      const Eigen::Vector3cd k3 = derivative(t + 0.5 * dt, g[k] + 0.5 * dt * k2);
      const Eigen::Vector3cd k4 = derivative(t + dt, g[k] + dt * k3);
      g[k + 1] = g[k] + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }

  auto field_dot_spin = [&](const Eigen::Vector3cd& v) -> OperatorMatrix {
    return v.x() * ops.s1 + v.y() * ops.s2 + v.z() * ops.s3;
  };

  double worst = 0.0;
  OperatorMatrix inv_prev = field_dot_spin(g[0]);
  OperatorMatrix inv_curr = field_dot_spin(g[1]);
  for (long k = 1; k < steps; ++k) {
    OperatorMatrix inv_next = field_dot_spin(g[k + 1]);
    const double t = t0 + dt * static_cast<double>(k);
    const OperatorMatrix h = omega * dot_with_spin(schedule.direction(t).vec(), ops);
    const OperatorMatrix residual =
        (inv_next - inv_prev) / (2.0 * dt) + Complex(0.0, -1.0) * commutator(inv_curr, h);
    worst = std::max(worst, residual.norm());
    inv_prev.swap(inv_curr);
    inv_curr.swap(inv_next);
  }
  return worst;
}

}  // namespace coilphase
