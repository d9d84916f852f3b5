#ifndef COILPHASE_FIBER_GEOMETRY_HPP
#define COILPHASE_FIBER_GEOMETRY_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace coilphase {

/// Direction cosines validated to unit length (1e-10).
class UnitVector3 {
 public:
  UnitVector3(double x, double y, double z);

  /// Builds from an arbitrary nonzero vector by normalising it.
  static UnitVector3 normalized(double x, double y, double z);

  double x() const { return v_.x(); }
  double y() const { return v_.y(); }
  double z() const { return v_.z(); }
  const Eigen::Vector3d& vec() const { return v_; }

 private:
  Eigen::Vector3d v_;
};

/// Coiled-fiber geometry: helix radius a and pitch d in meters, plus the
/// phase velocity of the guided light, given either directly or as c/n.
struct HelixSpec {
  double radius_a = 0.0;
  double pitch_d = 0.0;
  std::optional<double> refractive_index;
  std::optional<double> phase_velocity;

  static HelixSpec from_index(double radius_a, double pitch_d, double n);
  static HelixSpec from_velocity(double radius_a, double pitch_d, double v);

  /// Phase velocity in m/s (c/n when the index form was given).
  double velocity() const;

  void validate() const;
};

/// (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)) for theta in [0, pi].
UnitVector3 tangent_direction(double theta, double phi);

/// 2*pi*(1 - cos(theta)), the solid angle of the cone swept at polar angle
/// theta; in [0, 4*pi].
double solid_angle(double theta);

/// Path length per precession cycle, sqrt(d^2 + (4*pi*a)^2).
/// Note: the geometric length of one helix turn is sqrt(d^2 + (2*pi*a)^2);
/// this function keeps the 4*pi*a convention used by precession_frequency,
/// while helix_polar_angle uses the 2*pi*a tangent geometry.
double precession_cycle_length(const HelixSpec& helix);

/// Precessional angular rate Omega = 2*pi*v / sqrt(d^2 + (4*pi*a)^2).
double precession_frequency(const HelixSpec& helix);

/// Polar angle of the helix tangent, cos(theta) = d / sqrt(d^2 + (2*pi*a)^2).
double helix_polar_angle(const HelixSpec& helix);

struct PathSample {
  double t = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Tangent-direction history (theta(t), phi(t)) of the fiber together with
/// the optical angular frequency riding on it.
///
/// Parametric schedules hold theta fixed and advance phi at a constant
/// precession rate; sampled schedules interpolate a (t_k, theta_k, phi_k)
/// table piecewise linearly. phi is never range-reduced, so winding across
/// multiple turns is preserved.
class PathSchedule {
 public:
  static PathSchedule parametric(double theta0, double precession_omega, double phi0,
                                 double omega_optical, double duration);
  static PathSchedule sampled(std::vector<PathSample> samples, double omega_optical);

  double theta(double t) const;
  double phi(double t) const;
  UnitVector3 direction(double t) const;

  double start_time() const { return t0_; }
  double duration() const { return duration_; }
  double omega() const { return omega_; }

  bool parametric_form() const { return parametric_; }
  double theta0() const;
  double precession_omega() const;
  double phi0() const;
  const std::vector<PathSample>& samples() const;

  /// True when the tangent direction is constant over the whole schedule.
  bool static_direction() const;

  /// Upper bound on |d phi/dt| + |d theta/dt| over the schedule.
  double max_angular_rate() const;

 private:
  PathSchedule() = default;

  bool parametric_ = true;
  double theta0_ = 0.0;
  double precession_omega_ = 0.0;
  double phi0_ = 0.0;
  std::vector<PathSample> samples_;
  double omega_ = 0.0;
  double t0_ = 0.0;
  double duration_ = 0.0;
};

}  // namespace coilphase

#endif  // COILPHASE_FIBER_GEOMETRY_HPP
