#include "coilphase/fock_modes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace coilphase {

namespace {

constexpr double kPi = std::numbers::pi;

void require_polar_angle(double theta, const char* where) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::invalid_argument(std::string(where) + ": polar angle must lie in [0, pi]");
}

OperatorMatrix single_mode_lowering(int n_max) {
  OperatorMatrix a = OperatorMatrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

double handedness_sign(Handedness h) { return h == Handedness::left ? 1.0 : -1.0; }

}  // namespace

char handedness_label(Handedness h) { return h == Handedness::left ? 'L' : 'R'; }

Eigen::Index TwoModeFock::index_of(int n1, int n2) const {
  if (n1 < 0 || n2 < 0 || n1 > n_max || n2 > n_max)
    throw std::invalid_argument("TwoModeFock: occupation outside the truncated space");
  return static_cast<Eigen::Index>(n1) * (n_max + 1) + n2;
}

TwoModeFock build_fock(int n_max) {
  if (n_max < 1) throw std::invalid_argument("build_fock: n_max must be at least 1");

  const OperatorMatrix a = single_mode_lowering(n_max);
  const OperatorMatrix id = OperatorMatrix::Identity(n_max + 1, n_max + 1);

  TwoModeFock f;
  f.n_max = n_max;
  f.dim = static_cast<Eigen::Index>(n_max + 1) * (n_max + 1);
  f.a1 = Eigen::kroneckerProduct(a, id);
  f.a2 = Eigen::kroneckerProduct(id, a);
  f.a1_dag = f.a1.adjoint();
  f.a2_dag = f.a2.adjoint();
  return f;
}

CircularModes circular_transform(const TwoModeFock& f) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);

  CircularModes c;
  c.a_right = inv_sqrt2 * (f.a1 - i * f.a2);
  c.a_right_dag = inv_sqrt2 * (f.a1_dag + i * f.a2_dag);
  c.a_left = inv_sqrt2 * (f.a1 + i * f.a2);
  c.a_left_dag = inv_sqrt2 * (f.a1_dag - i * f.a2_dag);
  return c;
}

OperatorMatrix spin3_operator(const TwoModeFock& f) {
  const Complex half_i(0.0, 0.5);
  return half_i *
         (f.a1 * f.a2_dag - f.a1_dag * f.a2 - f.a2 * f.a1_dag + f.a2_dag * f.a1);
}

StateVector circular_number_state(const TwoModeFock& f, const CircularModes& c, int n_left,
                                  int n_right) {
  if (n_left < 0 || n_right < 0)
    throw std::invalid_argument("circular_number_state: occupations must be non-negative");
  if (n_left + n_right > f.n_max)
    throw std::invalid_argument(
        "circular_number_state: total occupation must stay below the truncation cutoff");

  StateVector state = StateVector::Zero(f.dim);
  state(f.index_of(0, 0)) = Complex(1.0, 0.0);
  for (int k = 0; k < n_left; ++k) state = c.a_left_dag * state;
  for (int k = 0; k < n_right; ++k) state = c.a_right_dag * state;
  state /= state.norm();
  return state;
}

double second_quantized_berry_phase(Handedness h, int n, double theta) {
  if (n < 0) throw std::invalid_argument("second_quantized_berry_phase: n must be non-negative");
  require_polar_angle(theta, "second_quantized_berry_phase");
  return handedness_sign(h) * 2.0 * kPi * (1.0 - std::cos(theta)) *
         (static_cast<double>(n) + 0.5);
}

double vacuum_cancellation(double theta) {
  return second_quantized_berry_phase(Handedness::left, 0, theta) +
         second_quantized_berry_phase(Handedness::right, 0, theta);
}

HannayCheck hannay_relation_check(Handedness h, int n, double theta) {
  const double gamma_n = second_quantized_berry_phase(h, n, theta);
  const double gamma_next = second_quantized_berry_phase(h, n + 1, theta);

  HannayCheck result;
  result.delta_theta = -(gamma_next - gamma_n);
  result.gamma0 = gamma_n + static_cast<double>(n) * result.delta_theta;
  return result;
}

OccupationPhaseTable occupation_phase_table(double theta, int n_show) {
  if (n_show < 0) throw std::invalid_argument("occupation_phase_table: n_show must be >= 0");
  require_polar_angle(theta, "occupation_phase_table");

  OccupationPhaseTable table;
  table.reserve(2 * (n_show + 1));
  for (Handedness h : {Handedness::left, Handedness::right})
    for (int n = 0; n <= n_show; ++n)
      table.push_back({h, n, theta, second_quantized_berry_phase(h, n, theta)});
  return table;
}

}  // namespace coilphase
