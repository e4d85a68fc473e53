#pragma once

// Fire-front position and rate-of-spread measurement.

#include <optional>
#include <span>
#include <vector>

#include "adrfire/grid.hpp"

namespace adrfire {

/// Which way the front faces. Forward means the burnt region lies at lower
/// coordinates and the front is the last crossing scanning upward.
enum class FrontDirection { Forward, Backward };

/// Outermost crossing of `threshold` on a sampled profile, by linear
/// interpolation between the bracketing samples. `coords` must be strictly
/// increasing. Empty when no sample is at or above the threshold, or when
/// every sample is (saturated domain).
std::optional<double> locate_front(std::span<const double> values, std::span<const double> coords,
                                   double threshold, FrontDirection dir);

/// Same on a uniform grid: position x0 + (i + 0.5 + frac) * dx.
std::optional<double> locate_front_uniform(std::span<const double> values, double x0, double dx,
                                           double threshold, FrontDirection dir);

/// Row j of a field along x (j = 0 for 1D).
std::optional<double> locate_front_x(const Field& T, int j, double threshold, FrontDirection dir);

/// Column i of a 2D field along y.
std::optional<double> locate_front_y(const Field& T, int i, double threshold, FrontDirection dir);

struct SpeedFit {
  double speed;
  double intercept;
  double residual;  ///< RMS deviation of the samples from the fitted line
  int samples;
};

/// Time-stamped front positions.
class FrontTrace {
 public:
  /// Appends a sample; times must increase strictly.
  void add(double t, double position);

  const std::vector<double>& times() const { return t_; }
  const std::vector<double>& positions() const { return x_; }
  std::size_t size() const { return t_.size(); }
  bool empty() const { return t_.empty(); }

  /// Average speed from the first sample to sample n. NaN for n == 0.
  double speed_to_date(std::size_t n) const;

 private:
  std::vector<double> t_;
  std::vector<double> x_;
};

/// Least-squares line through the samples with t in [t_lo, t_hi].
/// Throws std::invalid_argument with fewer than 5 samples in the window.
SpeedFit estimate_speed(const FrontTrace& trace, double t_lo, double t_hi);

}  // namespace adrfire
