#include "coilphase/fiber_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace coilphase {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSpeedOfLight = 299792458.0;

void require_polar_angle(double theta, const char* where) {
  if (!(theta >= 0.0 && theta <= kPi))
    throw std::invalid_argument(std::string(where) + ": polar angle must lie in [0, pi]");
}

}  // namespace

UnitVector3::UnitVector3(double x, double y, double z) : v_(x, y, z) {
  if (std::abs(v_.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("UnitVector3: components must have unit norm");
}

UnitVector3 UnitVector3::normalized(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw std::invalid_argument("UnitVector3: cannot normalise a zero or non-finite vector");
  return UnitVector3(x / norm, y / norm, z / norm);
}

HelixSpec HelixSpec::from_index(double radius_a, double pitch_d, double n) {
  HelixSpec h;
  h.radius_a = radius_a;
  h.pitch_d = pitch_d;
  h.refractive_index = n;
  h.validate();
  return h;
}

HelixSpec HelixSpec::from_velocity(double radius_a, double pitch_d, double v) {
  HelixSpec h;
  h.radius_a = radius_a;
  h.pitch_d = pitch_d;
  h.phase_velocity = v;
  h.validate();
  return h;
}

double HelixSpec::velocity() const {
  if (phase_velocity) return *phase_velocity;
  return kSpeedOfLight / *refractive_index;
}

void HelixSpec::validate() const {
  if (!(radius_a > 0.0) || !std::isfinite(radius_a))
    throw std::invalid_argument("HelixSpec: radius_a must be positive");
  if (!(pitch_d > 0.0) || !std::isfinite(pitch_d))
    throw std::invalid_argument("HelixSpec: pitch_d must be positive");
  if (refractive_index.has_value() == phase_velocity.has_value())
    throw std::invalid_argument(
        "HelixSpec: exactly one of refractive_index and phase_velocity must be set");
  if (refractive_index && !(*refractive_index >= 1.0))
    throw std::invalid_argument("HelixSpec: refractive_index must be >= 1");
  if (phase_velocity && !(*phase_velocity > 0.0 && *phase_velocity <= kSpeedOfLight))
    throw std::invalid_argument("HelixSpec: phase_velocity must lie in (0, c]");
}

UnitVector3 tangent_direction(double theta, double phi) {
  require_polar_angle(theta, "tangent_direction");
  const double st = std::sin(theta);
  return UnitVector3(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

double solid_angle(double theta) {
  require_polar_angle(theta, "solid_angle");
  return 2.0 * kPi * (1.0 - std::cos(theta));
}

double precession_cycle_length(const HelixSpec& helix) {
  helix.validate();
  return std::hypot(helix.pitch_d, 4.0 * kPi * helix.radius_a);
}

double precession_frequency(const HelixSpec& helix) {
  return 2.0 * kPi * helix.velocity() / precession_cycle_length(helix);
}

double helix_polar_angle(const HelixSpec& helix) {
  helix.validate();
  const double turn = std::hypot(helix.pitch_d, 2.0 * kPi * helix.radius_a);
  return std::acos(helix.pitch_d / turn);
}

PathSchedule PathSchedule::parametric(double theta0, double precession_omega, double phi0,
                                      double omega_optical, double duration) {
  require_polar_angle(theta0, "PathSchedule");
  if (!(omega_optical > 0.0) || !std::isfinite(omega_optical))
    throw std::invalid_argument("PathSchedule: omega_optical must be positive");
  if (!(duration > 0.0) || !std::isfinite(duration))
    throw std::invalid_argument("PathSchedule: duration must be positive");
  if (!std::isfinite(precession_omega) || !std::isfinite(phi0))
    throw std::invalid_argument("PathSchedule: parameters must be finite");

  PathSchedule s;
  s.parametric_ = true;
  s.theta0_ = theta0;
  s.precession_omega_ = precession_omega;
  s.phi0_ = phi0;
  s.omega_ = omega_optical;
  s.t0_ = 0.0;
  s.duration_ = duration;
  return s;
}

PathSchedule PathSchedule::sampled(std::vector<PathSample> samples, double omega_optical) {
  if (samples.size() < 2)
    throw std::invalid_argument("PathSchedule: sampled table needs at least 2 points");
  if (!(omega_optical > 0.0) || !std::isfinite(omega_optical))
    throw std::invalid_argument("PathSchedule: omega_optical must be positive");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    require_polar_angle(samples[i].theta, "PathSchedule");
    if (!std::isfinite(samples[i].t) || !std::isfinite(samples[i].phi))
      throw std::invalid_argument("PathSchedule: samples must be finite");
    if (i > 0 && !(samples[i].t > samples[i - 1].t))
      throw std::invalid_argument("PathSchedule: sample times must be strictly increasing");
  }

  PathSchedule s;
  s.parametric_ = false;
  s.samples_ = std::move(samples);
  s.omega_ = omega_optical;
  s.t0_ = s.samples_.front().t;
  s.duration_ = s.samples_.back().t - s.samples_.front().t;
  return s;
}

double PathSchedule::theta(double t) const {
  if (parametric_) return theta0_;
  const double clamped = std::clamp(t, samples_.front().t, samples_.back().t);
  auto hi = std::upper_bound(samples_.begin(), samples_.end(), clamped,
                             [](double value, const PathSample& s) { return value < s.t; });
  if (hi == samples_.begin()) return samples_.front().theta;
  if (hi == samples_.end()) return samples_.back().theta;
  auto lo = hi - 1;
  const double w = (clamped - lo->t) / (hi->t - lo->t);
  return lo->theta + w * (hi->theta - lo->theta);
}

double PathSchedule::phi(double t) const {
  if (parametric_) return phi0_ + precession_omega_ * (t - t0_);
  const double clamped = std::clamp(t, samples_.front().t, samples_.back().t);
  auto hi = std::upper_bound(samples_.begin(), samples_.end(), clamped,
                             [](double value, const PathSample& s) { return value < s.t; });
  if (hi == samples_.begin()) return samples_.front().phi;
  if (hi == samples_.end()) return samples_.back().phi;
  auto lo = hi - 1;
  const double w = (clamped - lo->t) / (hi->t - lo->t);
  return lo->phi + w * (hi->phi - lo->phi);
}

UnitVector3 PathSchedule::direction(double t) const { return tangent_direction(theta(t), phi(t)); }

double PathSchedule::theta0() const {
  if (!parametric_) throw std::logic_error("PathSchedule: theta0 is only defined for parametric form");
  return theta0_;
}

double PathSchedule::precession_omega() const {
  if (!parametric_)
    throw std::logic_error("PathSchedule: precession_omega is only defined for parametric form");
  return precession_omega_;
}

double PathSchedule::phi0() const {
  if (!parametric_) throw std::logic_error("PathSchedule: phi0 is only defined for parametric form");
  return phi0_;
}

const std::vector<PathSample>& PathSchedule::samples() const {
  if (parametric_) throw std::logic_error("PathSchedule: samples are only defined for sampled form");
  return samples_;
}

bool PathSchedule::static_direction() const {
  if (parametric_) return precession_omega_ == 0.0 || theta0_ == 0.0;
  for (const PathSample& s : samples_)
    if (s.theta != samples_.front().theta || s.phi != samples_.front().phi) return false;
  return true;
}

double PathSchedule::max_angular_rate() const {
  if (parametric_) return std::abs(precession_omega_);
  double rate = 0.0;
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    const double dt = samples_[i].t - samples_[i - 1].t;
    rate = std::max(rate, (std::abs(samples_[i].phi - samples_[i - 1].phi) +
                           std::abs(samples_[i].theta - samples_[i - 1].theta)) /
                              dt);
  }
  return rate;
}

}  // namespace coilphase
