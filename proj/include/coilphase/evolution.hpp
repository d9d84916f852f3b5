#ifndef COILPHASE_EVOLUTION_HPP
#define COILPHASE_EVOLUTION_HPP

#include <stdexcept>

#include "coilphase/fiber_geometry.hpp"
#include "coilphase/spin_algebra.hpp"
#include "coilphase/types.hpp"

namespace coilphase {

/// Signals that a fixed-step integration ran too coarsely: a per-step norm
/// drift above 1e-12, an accumulated drift above 1e-9, or an overlap-phase
/// increment at or above pi/2.
class StepSizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Phases of one cyclic evolution, radians. The total is the unwrapped
/// overlap phase against the transported eigenframe and satisfies
/// total = geometric - dynamical.
struct PhaseDecomposition {
  double total = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
};

struct PhaseExtraction {
  PhaseDecomposition phases;
  long steps_used = 0;
  /// Largest single overlap-phase increment encountered (must stay < pi/2).
  double max_increment = 0.0;
  /// Signed accumulated norm drift before per-step renormalisation.
  double norm_drift = 0.0;
};

/// Classical field vector G = E + i v B of one circular component, V/m,
/// together with the medium phase velocity.
struct ClassicalFieldVector {
  Eigen::Vector3cd g;
  double phase_velocity = 0.0;
};

/// Frame unitary V(theta, phi) = exp{ -(theta/2) e^{-i phi} S+ +
/// (theta/2) e^{i phi} S- }. Maps the s3 axis onto the tangent direction:
/// V s3 V^dagger = n . S.
OperatorMatrix unitary_V(double theta, double phi, const SpinOperatorSet& ops);

/// Quadrature of <m| V^dagger (omega n.S) V |m> over the schedule; equals
/// m * omega * T because V|m> is the instantaneous eigenstate.
double dynamical_phase(const PathSchedule& schedule, double m, const SpinOperatorSet& ops);

/// -m * integral of phi_dot (1 - cos theta) dt over the schedule, evaluated
/// segment-by-segment on the piecewise-linear path. Reparameterisation
/// invariant; for one precession cycle at fixed theta this is
/// -2*pi*(1 - cos theta)*m.
double geometric_phase(const PathSchedule& schedule, double m, const SpinOperatorSet& ops);

/// Step count that keeps the fixed-step integrator inside its norm-drift
/// budget for this schedule; never below `requested`.
long recommended_step_count(const PathSchedule& schedule, const SpinOperatorSet& ops,
                            long requested = 0);

/// Fixed-step 4th-order integration of i dpsi/dt = omega (n(t).S) psi.
/// Renormalises after every step; throws if the per-step norm drift exceeds
/// 1e-12 or the accumulated drift exceeds 1e-9 (step size too coarse).
StateVector integrate_schrodinger(const PathSchedule& schedule, const StateVector& psi0,
                                  const SpinOperatorSet& ops, long steps);

/// Evolves V(t0)|m> through the schedule and splits the accumulated phase
/// into dynamical and geometric parts per the V(t)|m> reference frame.
/// `steps` is a lower bound; the count is raised as needed to keep overlap
/// increments below pi/2 and the integrator inside its drift budget.
PhaseExtraction extract_phases(const PathSchedule& schedule, double m,
                               const SpinOperatorSet& ops, long steps);

/// Overload taking the initial s3 eigenstate itself (up to a global phase).
PhaseExtraction extract_phases(const PathSchedule& schedule, const StateVector& psi0,
                               const SpinOperatorSet& ops, long steps);

/// Evolves G by G_dot = omega n(t) x G, forms I = G.S and H = omega n.S,
/// and returns the largest Frobenius norm of the centered-difference
/// residual dI/dt + (1/i)[I, H] over the interior grid. Second order in the
/// step for piecewise-constant direction.
double lvn_residual(const PathSchedule& schedule, const ClassicalFieldVector& g0,
                    const SpinOperatorSet& ops, long steps);

}  // namespace coilphase

#endif  // COILPHASE_EVOLUTION_HPP
