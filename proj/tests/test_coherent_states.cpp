#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coilphase/coherent_states.hpp"

using namespace coilphase;

namespace {

constexpr double kPi = std::numbers::pi;

PhaseTable zero_table(int n_max) { return PhaseTable(n_max + 1); }

}  // namespace

TEST_CASE("build_phased_coherent validates its inputs") {
  CHECK_THROWS_AS(build_phased_coherent(Complex(3.0, 0.0), zero_table(30), 30),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_phased_coherent(Complex(1.0, 0.0), zero_table(10), 30),
                  std::invalid_argument);
}

TEST_CASE("alpha = 0 is the vacuum with the vacuum phase") {
  PhaseTable gamma = zero_table(12);
  gamma[0].geometric = 0.7;
  const PhasedCoherentState state = build_phased_coherent(Complex(0.0, 0.0), gamma, 12);
  CHECK(std::abs(state.amplitudes()(0) - std::exp(Complex(0.0, 0.7))) < 1e-15);
  for (int n = 1; n <= 12; ++n) CHECK(std::abs(state.amplitudes()(n)) == 0.0);
}

TEST_CASE("unphased alpha = 1 state is Poissonian with unit mean") {
  const PhasedCoherentState state = build_phased_coherent(Complex(1.0, 0.0), zero_table(30), 30);
  CHECK(std::abs(state.norm_deficit()) < 1e-10);

  double mean = 0.0;
  for (int n = 0; n <= 30; ++n) mean += n * std::norm(state.amplitudes()(n));
  CHECK(std::abs(mean - 1.0) < 1e-10);

  // Poisson tail bound: the missing weight is e^{-1} sum_{n>30} 1/n!.
  double tail = 0.0;
  double term = std::exp(-1.0);
  for (int n = 1; n <= 31; ++n) term /= n;
  for (int n = 31; n < 60; ++n) {
    tail += term;
    term /= (n + 1);
  }
  CHECK(state.norm_deficit() == doctest::Approx(tail).epsilon(1e-6));
}

TEST_CASE("quadrature expectation: trivial and closed-form cases") {
  CHECK(quadrature_expectation(build_phased_coherent(Complex(0.0, 0.0), zero_table(20), 20)) ==
        doctest::Approx(0.0).epsilon(1e-15));

  const PhasedCoherentState plain = build_phased_coherent(Complex(1.0, 0.0), zero_table(30), 30);
  CHECK(std::abs(quadrature_expectation(plain) - std::sqrt(2.0)) < 1e-10);
}

TEST_CASE("uniform phase differences shift the quadrature per the closed form") {
  const double theta = kPi / 3.0;
  const double delta = -2.0 * kPi * (1.0 - std::cos(theta));  // = -pi at this theta

  PhaseTable gamma(31);
  for (int n = 0; n <= 30; ++n) gamma[n].geometric = delta * n;
  const PhasedCoherentState state = build_phased_coherent(Complex(1.0, 0.0), gamma, 30);

  const double contracted = quadrature_expectation(state);
  const double closed = quadrature_closed_form(Complex(1.0, 0.0), delta);
  CHECK(std::abs(closed - std::sqrt(2.0) * std::cos(kPi)) < 1e-14);
  CHECK(std::abs(contracted - closed) < 1e-8);

  // The raw contraction stays real.
  const StateVector& c = state.amplitudes();
  Complex raw_a(0.0, 0.0);
  for (int n = 0; n < 30; ++n)
    raw_a += std::conj(c(n)) * std::sqrt(static_cast<double>(n + 1)) * c(n + 1);
  CHECK(std::abs((raw_a + std::conj(raw_a)).imag() / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("quadrature contraction matches the closed form for complex alpha") {
  const Complex alpha(0.8, -0.6);
  const double delta = 0.37;
  PhaseTable gamma(31);
  for (int n = 0; n <= 30; ++n) gamma[n].geometric = delta * n + 0.2;
  const PhasedCoherentState state = build_phased_coherent(alpha, gamma, 30);
  CHECK(std::abs(quadrature_expectation(state) - quadrature_closed_form(alpha, delta)) < 1e-8);
}

TEST_CASE("phase_shift_delta reports uniform differences per part") {
  CHECK_THROWS_AS(phase_shift_delta(PhaseTable(1)), std::invalid_argument);

  const PhaseShift flat = phase_shift_delta(zero_table(5));
  CHECK(flat.delta_combined == 0.0);
  CHECK(flat.uniform);

  const double theta = 0.9;
  const PhaseTable table = berry_phase_table(Handedness::right, theta, 2.0, kPi, 20);
  const PhaseShift shift = phase_shift_delta(table);
  CHECK(shift.geometric_uniform);
  CHECK(shift.dynamical_uniform);
  CHECK(shift.uniform);
  CHECK(std::abs(shift.delta_geometric - (-2.0 * kPi * (1.0 - std::cos(theta)))) < 1e-12);
  CHECK(std::abs(shift.delta_dynamical - 2.0 * kPi) < 1e-12);

  PhaseTable ragged = table;
  ragged[7].geometric += 1e-6;
  CHECK(!phase_shift_delta(ragged).geometric_uniform);
}

TEST_CASE("the vacuum half-quantum offset cancels in the phase shift") {
  const double theta = 1.3;
  const PhaseTable with_offset = berry_phase_table(Handedness::right, theta, 1.0, 1.0, 15);

  PhaseTable without_offset = with_offset;
  for (int n = 0; n <= 15; ++n)
    without_offset[n].geometric = -2.0 * kPi * (1.0 - std::cos(theta)) * n;

  const PhaseShift a = phase_shift_delta(with_offset);
  const PhaseShift b = phase_shift_delta(without_offset);
  CHECK(std::abs(a.delta_geometric - b.delta_geometric) < 1e-12);
}

TEST_CASE("berry_phase_table is affine in n for both handednesses") {
  for (Handedness h : {Handedness::left, Handedness::right}) {
    const PhaseTable table = berry_phase_table(h, 0.8, 3.0, 2.0, 20);
    const double first = table[1].geometric - table[0].geometric;
    for (int n = 0; n < 20; ++n) {
      CHECK(std::abs((table[n + 1].geometric - table[n].geometric) - first) < 1e-12);
      CHECK(std::abs((table[n + 1].dynamical - table[n].dynamical) - 6.0) < 1e-12);
    }
  }
}
