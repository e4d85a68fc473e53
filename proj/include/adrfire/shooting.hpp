#pragma once

// Travelling-wave speeds of the 1D linearized (memory) combustion model by
// shooting on the wave-frame ODE system.

#include <array>
#include <string>
#include <vector>

#include "adrfire/physics.hpp"

namespace adrfire {

/// Wave-frame problem, xi = x - c t, constant diffusivity K = k.
///
/// Speeds are signed: c > 0 is a front moving toward +x with unburnt fuel
/// ahead at large xi; c < 0 is the mirror front moving toward -x, solved as
/// the c > 0 problem with v -> -v.
struct ShootingProblem {
  double rho = 1.0;
  double c = 1.0;  ///< specific heat
  double k = 1.0;
  double h = 0.5;
  double T_inf = 300.0;
  double T_bar = 400.0;
  double S = 1e4;
  double A_L = 2e-4;
  double v = 0.0;   ///< advection speed
  double Y0 = 1.0;  ///< unburnt fuel fraction

  double c_lo = 0.25;  ///< signed speed bracket
  double c_hi = 6.0;
  double min_speed = 0.25;  ///< |c| below this is not scanned
  int scan_points = 48;     ///< per sign of c
  double decay_factor = 1e8;
  double rtol = 1e-8;
  double escape_factor = 50.0;  ///< burning-side cap, in units of T_bar - T_inf

  static ShootingProblem from(const ModelParameters& p, double v, double Y0);
  void validate() const;
};

/// (dU/dxi, dU'/dxi, dV/dxi) for U temperature, U' its slope, V fuel.
/// `burning` is the Heaviside memory factor: true behind the ignition point.
std::array<double, 3> tw_ode_rhs(double U, double Up, double V, double c,
                                 const ShootingProblem& pb, bool burning);

enum class ShotOutcome { Overshoot, Undershoot, Tail };

struct ShotResult {
  double mismatch;   ///< signed; zero crossings in c are wave speeds
  ShotOutcome outcome;
  double distance;   ///< burnt-side distance integrated before stopping
  double length;     ///< truncation length L
  double ignition_slope;  ///< U' at the ignition point
};

ShotResult shoot_detail(double c, const ShootingProblem& pb);
double shoot(double c, const ShootingProblem& pb);

struct WaveSpeedReport {
  std::vector<double> roots;      ///< ascending
  std::vector<double> residuals;  ///< |mismatch| at each root
  std::vector<double> scan_c;
  std::vector<double> scan_mismatch;
};

/// Coarse scan of the bracket (geometric in |c| on each side of zero, with
/// |c| >= min_speed), then bisection of every sign change to
/// 1e-6 (c_hi - c_lo).
WaveSpeedReport find_wave_speeds(const ShootingProblem& pb);

std::string to_string(ShotOutcome o);

}  // namespace adrfire
