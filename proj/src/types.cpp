#include "coilphase/types.hpp"

#include <cmath>

namespace coilphase {

double hermiticity_defect(const OperatorMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const OperatorMatrix& a) {
  const OperatorMatrix product = a * a.adjoint();
  return (product - OperatorMatrix::Identity(a.rows(), a.cols())).norm();
}

bool all_finite(const OperatorMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      if (!std::isfinite(a(i, k).real()) || !std::isfinite(a(i, k).imag())) return false;
  return true;
}

bool all_finite(const StateVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  return true;
}

}  // namespace coilphase
