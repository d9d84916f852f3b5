#ifndef COILPHASE_COHERENT_STATES_HPP
#define COILPHASE_COHERENT_STATES_HPP

#include <vector>

#include "coilphase/fock_modes.hpp"
#include "coilphase/types.hpp"

namespace coilphase {

/// Evolution phase of one occupation level, split so the geometric content
/// stays separable from the dynamical one. The phase entering the state is
/// geometric - dynamical.
struct PhasePair {
  double geometric = 0.0;
  double dynamical = 0.0;

  double combined() const { return geometric - dynamical; }
};

/// Per-occupation phase table, indexed by n.
using PhaseTable = std::vector<PhasePair>;

/// Coherent state whose number-state components each carry their own
/// evolution phase: c_n = exp(-|alpha|^2/2) alpha^n / sqrt(n!) e^{i gamma_n}
/// on the single-mode space truncated at n_max.
class PhasedCoherentState {
 public:
  PhasedCoherentState(Complex alpha, int n_max, StateVector amplitudes);

  Complex alpha() const { return alpha_; }
  int n_max() const { return n_max_; }
  const StateVector& amplitudes() const { return amplitudes_; }

  /// 1 - |psi|^2, the Poisson tail lost to truncation.
  double norm_deficit() const;

 private:
  Complex alpha_;
  int n_max_ = 0;
  StateVector amplitudes_;
};

/// Requires |alpha|^2 <= n_max - 10|alpha| and a phase table covering 0..n_max.
PhasedCoherentState build_phased_coherent(Complex alpha, const PhaseTable& gamma, int n_max);

/// <q> with q = (a + a+)/sqrt(2), by direct contraction with the truncated
/// ladder matrices.
double quadrature_expectation(const PhasedCoherentState& state);

/// (alpha* e^{-i delta} + alpha e^{i delta}) / sqrt(2), the closed form of
/// <q> when successive occupation phases differ by the constant delta.
double quadrature_closed_form(Complex alpha, double delta);

struct PhaseShift {
  double delta_geometric = 0.0;
  double delta_dynamical = 0.0;
  double delta_combined = 0.0;
  bool geometric_uniform = false;
  bool dynamical_uniform = false;
  bool uniform = false;  // combined-phase differences agree to 1e-12
};

/// First difference gamma_{n+1} - gamma_n of the table, reported per part,
/// with flags telling whether the difference is occupation independent.
PhaseShift phase_shift_delta(const PhaseTable& gamma);

/// Phase table of one circular handedness over n = 0..n_max: geometric parts
/// from the closed-form cyclic phases, dynamical parts (n + 1/2) omega T.
PhaseTable berry_phase_table(Handedness h, double theta, double omega, double duration,
                             int n_max);

}  // namespace coilphase

#endif  // COILPHASE_COHERENT_STATES_HPP
