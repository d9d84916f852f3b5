#include "coilphase/coherent_states.hpp"

#include <cmath>
#include <stdexcept>

namespace coilphase {

namespace {

constexpr double kUniformTol = 1e-12;

OperatorMatrix single_mode_lowering(int n_max) {
  OperatorMatrix a = OperatorMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

PhasedCoherentState::PhasedCoherentState(Complex alpha, int n_max, StateVector amplitudes)
    : alpha_(alpha), n_max_(n_max), amplitudes_(std::move(amplitudes)) {
  if (n_max_ < 0 || amplitudes_.size() != n_max_ + 1)
    throw std::invalid_argument("PhasedCoherentState: amplitude vector must have n_max+1 entries");
  if (!all_finite(amplitudes_))
    throw std::invalid_argument("PhasedCoherentState: amplitudes must be finite");
}

double PhasedCoherentState::norm_deficit() const { return 1.0 - amplitudes_.squaredNorm(); }

PhasedCoherentState build_phased_coherent(Complex alpha, const PhaseTable& gamma, int n_max) {
  if (n_max < 1) throw std::invalid_argument("build_phased_coherent: n_max must be at least 1");
  const double mod = std::abs(alpha);
  if (!std::isfinite(mod)) throw std::invalid_argument("build_phased_coherent: alpha must be finite");
  if (mod * mod > static_cast<double>(n_max) - 10.0 * mod)
    throw std::invalid_argument(
        "build_phased_coherent: |alpha|^2 must not exceed n_max - 10|alpha| (truncation safety)");
  if (gamma.size() < static_cast<std::size_t>(n_max) + 1)
    throw std::invalid_argument("build_phased_coherent: phase table must cover n = 0..n_max");

  StateVector amplitudes(n_max + 1);
  // Poisson weights by recurrence: w_0 = e^{-|alpha|^2/2}, w_{n+1} = w_n alpha / sqrt(n+1).
  Complex weight(std::exp(-0.5 * mod * mod), 0.0);
  for (int n = 0; n <= n_max; ++n) {
    amplitudes(n) = weight * std::exp(Complex(0.0, gamma[n].combined()));
    weight *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  return PhasedCoherentState(alpha, n_max, std::move(amplitudes));
}

double quadrature_expectation(const PhasedCoherentState& state) {
  const int n_max = state.n_max();
  const OperatorMatrix a = single_mode_lowering(n_max);
  const OperatorMatrix q = (a + a.adjoint()) / std::sqrt(2.0);
  const Complex value =
      (state.amplitudes().adjoint() * (q * state.amplitudes()))(0, 0);
  return value.real();
}

double quadrature_closed_form(Complex alpha, double delta) {
  const Complex phase = std::exp(Complex(0.0, delta));
  return ((std::conj(alpha) / phase + alpha * phase) / std::sqrt(2.0)).real();
}

PhaseShift phase_shift_delta(const PhaseTable& gamma) {
  if (gamma.size() < 2)
    throw std::invalid_argument("phase_shift_delta: table needs at least 2 entries");

  PhaseShift shift;
  shift.delta_geometric = gamma[1].geometric - gamma[0].geometric;
  shift.delta_dynamical = gamma[1].dynamical - gamma[0].dynamical;
  shift.delta_combined = gamma[1].combined() - gamma[0].combined();
  shift.geometric_uniform = true;
  shift.dynamical_uniform = true;
  shift.uniform = true;
  for (std::size_t n = 1; n + 1 < gamma.size(); ++n) {
    if (std::abs((gamma[n + 1].geometric - gamma[n].geometric) - shift.delta_geometric) >
        kUniformTol)
      shift.geometric_uniform = false;
    if (std::abs((gamma[n + 1].dynamical - gamma[n].dynamical) - shift.delta_dynamical) >
        kUniformTol)
      shift.dynamical_uniform = false;
    if (std::abs((gamma[n + 1].combined() - gamma[n].combined()) - shift.delta_combined) >
        kUniformTol)
      shift.uniform = false;
  }
  return shift;
}

PhaseTable berry_phase_table(Handedness h, double theta, double omega, double duration,
                             int n_max) {
  if (n_max < 0) throw std::invalid_argument("berry_phase_table: n_max must be >= 0");
  if (!(omega > 0.0) || !(duration > 0.0))
    throw std::invalid_argument("berry_phase_table: omega and duration must be positive");

  PhaseTable table(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    table[n].geometric = second_quantized_berry_phase(h, n, theta);
    table[n].dynamical = (static_cast<double>(n) + 0.5) * omega * duration;
  }
  return table;
}

}  // namespace coilphase
