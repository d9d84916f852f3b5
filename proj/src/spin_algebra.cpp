#include "coilphase/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace coilphase {

namespace {

long half_integer_doubled(double j) {
  const double doubled = 2.0 * j;
  const long rounded = std::lround(doubled);
  if (!std::isfinite(j) || std::abs(doubled - static_cast<double>(rounded)) > 1e-9)
    throw std::invalid_argument("spin j must be a half-integer");
  return rounded;
}

}  // namespace

Eigen::Index SpinOperatorSet::index_of(double m) const {
  const double offset = j - m;
  const long idx = std::lround(offset);
  if (std::abs(offset - static_cast<double>(idx)) > 1e-9 || idx < 0 || idx >= dim)
    throw std::invalid_argument("helicity index m must be one of j, j-1, ..., -j");
  return static_cast<Eigen::Index>(idx);
}

StateVector SpinOperatorSet::eigenstate(double m) const {
  StateVector v = StateVector::Zero(dim);
  v(index_of(m)) = Complex(1.0, 0.0);
  return v;
}

SpinOperatorSet make_spin_operators(double j) {
  const long two_j = half_integer_doubled(j);
  if (two_j < 1) throw std::invalid_argument("spin j must be positive");

  SpinOperatorSet ops;
  ops.j = j;
  ops.dim = static_cast<Eigen::Index>(two_j + 1);

  ops.s3 = OperatorMatrix::Zero(ops.dim, ops.dim);
  ops.s_plus = OperatorMatrix::Zero(ops.dim, ops.dim);

  for (Eigen::Index i = 0; i < ops.dim; ++i) {
    const double m = j - static_cast<double>(i);
    ops.s3(i, i) = m;
    if (i > 0) {
      // <m+1| S+ |m> = sqrt(j(j+1) - m(m+1)) with m = j - i.
      ops.s_plus(i - 1, i) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
  }
  ops.s_minus = ops.s_plus.adjoint();
  ops.s1 = 0.5 * (ops.s_plus + ops.s_minus);
  ops.s2 = Complex(0.0, -0.5) * (ops.s_plus - ops.s_minus);
  return ops;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("commutator requires equally sized square matrices");
  return a * b - b * a;
}

OperatorMatrix dot_with_spin(const Eigen::Vector3d& n, const SpinOperatorSet& ops) {
  if (std::abs(n.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("dot_with_spin requires a unit vector");
  return n.x() * ops.s1 + n.y() * ops.s2 + n.z() * ops.s3;
}

OperatorMatrix matrix_exponential(const OperatorMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_exponential requires a square matrix");
  if (!all_finite(a)) throw std::invalid_argument("matrix_exponential requires finite entries");
  return a.exp();
}

}  // namespace coilphase
