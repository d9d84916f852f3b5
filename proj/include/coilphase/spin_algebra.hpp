#ifndef COILPHASE_SPIN_ALGEBRA_HPP
#define COILPHASE_SPIN_ALGEBRA_HPP

#include "coilphase/types.hpp"

namespace coilphase {

/// Spin-j operator matrices in the basis where s3 is diagonal with
/// eigenvalues j, j-1, ..., -j (hbar = 1, highest helicity first).
struct SpinOperatorSet {
  double j = 0.0;
  Eigen::Index dim = 0;
  OperatorMatrix s1;
  OperatorMatrix s2;
  OperatorMatrix s3;
  OperatorMatrix s_plus;
  OperatorMatrix s_minus;

  /// Basis row of the s3 eigenstate with eigenvalue m.
  Eigen::Index index_of(double m) const;

  /// Unit basis vector |m>.
  StateVector eigenstate(double m) const;
};

/// Builds the standard (2j+1)-dimensional spin matrices for half-integer j.
SpinOperatorSet make_spin_operators(double j);

/// a*b - b*a for equally sized square matrices.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// n . S for a unit vector n (|n| = 1 to 1e-10).
OperatorMatrix dot_with_spin(const Eigen::Vector3d& n, const SpinOperatorSet& ops);

/// Dense matrix exponential, accurate to 1e-12 relative for norms up to ~20.
OperatorMatrix matrix_exponential(const OperatorMatrix& a);

}  // namespace coilphase

#endif  // COILPHASE_SPIN_ALGEBRA_HPP
