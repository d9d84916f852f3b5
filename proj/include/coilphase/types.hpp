#ifndef COILPHASE_TYPES_HPP
#define COILPHASE_TYPES_HPP

#include <complex>

#include <Eigen/Dense>

namespace coilphase {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest entrywise deviation from a = a^dagger; zero for Hermitian input.
double hermiticity_defect(const OperatorMatrix& a);

/// Frobenius distance of a * a^dagger from the identity.
double unitarity_defect(const OperatorMatrix& a);

bool all_finite(const OperatorMatrix& a);
bool all_finite(const StateVector& v);

}  // namespace coilphase

#endif  // COILPHASE_TYPES_HPP
