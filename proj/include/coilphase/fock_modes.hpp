#ifndef COILPHASE_FOCK_MODES_HPP
#define COILPHASE_FOCK_MODES_HPP

#include <vector>

#include "coilphase/types.hpp"

namespace coilphase {

enum class Handedness { left, right };

char handedness_label(Handedness h);

/// Two bosonic modes truncated at occupation n_max each. Basis index is
/// n1 * (n_max + 1) + n2; commutation relations hold exactly on states with
/// occupation below the cutoff.
struct TwoModeFock {
  int n_max = 0;
  Eigen::Index dim = 0;
  OperatorMatrix a1;
  OperatorMatrix a1_dag;
  OperatorMatrix a2;
  OperatorMatrix a2_dag;

  Eigen::Index index_of(int n1, int n2) const;
};

TwoModeFock build_fock(int n_max);

/// Circularly polarised ladder operators,
/// a_R = (a1 - i a2)/sqrt(2), a_L = (a1 + i a2)/sqrt(2).
struct CircularModes {
  OperatorMatrix a_right;
  OperatorMatrix a_right_dag;
  OperatorMatrix a_left;
  OperatorMatrix a_left_dag;
};

CircularModes circular_transform(const TwoModeFock& f);

/// Monomode spin component S3 = (i/2)(a1 a2+ - a1+ a2 - a2 a1+ + a2+ a1),
/// hbar = 1. Equals (aR+ aR + 1/2) - (aL+ aL + 1/2) below the cutoff.
OperatorMatrix spin3_operator(const TwoModeFock& f);

/// |n_left, n_right> in the circular basis, built by applying the circular
/// raising operators to the vacuum and normalising. Requires
/// n_left + n_right <= n_max.
StateVector circular_number_state(const TwoModeFock& f, const CircularModes& c,
                                  int n_left, int n_right);

/// Cyclic geometric phase of the occupation-n circular mode over one
/// precession period: +2*pi*(1-cos theta)*(n + 1/2) for left,
/// -2*pi*(1-cos theta)*(n + 1/2) for right.
double second_quantized_berry_phase(Handedness h, int n, double theta);

/// gamma_0L(theta) + gamma_0R(theta); identically zero in floating point
/// because the two vacuum phases are the same magnitude with opposite signs.
double vacuum_cancellation(double theta);

struct HannayCheck {
  /// Angle-variable shift, -(gamma(n+1) - gamma(n)).
  double delta_theta = 0.0;
  /// Occupation-independent remainder gamma(n) + n * delta_theta.
  double gamma0 = 0.0;
};

/// Discrete form of the angle/phase relation; gamma0 is the vacuum-level
/// phase +/- pi*(1-cos theta) and must not depend on n.
HannayCheck hannay_relation_check(Handedness h, int n, double theta);

struct OccupationPhaseRow {
  Handedness handedness = Handedness::left;
  int n = 0;
  double theta = 0.0;
  double gamma_g = 0.0;
};

using OccupationPhaseTable = std::vector<OccupationPhaseRow>;

/// Table of per-occupation cyclic phases for both handednesses, n = 0..n_show.
OccupationPhaseTable occupation_phase_table(double theta, int n_show);

}  // namespace coilphase

#endif  // COILPHASE_FOCK_MODES_HPP
