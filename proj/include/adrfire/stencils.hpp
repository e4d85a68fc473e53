#pragma once

// Per-cell stencil arithmetic shared by the OpenMP operators and the serial
// reference path. Both loop over cells and call these, so their results are
// bitwise identical; only the iteration strategy differs.
//
// Every function reads values at p[k * s] for the stencil offsets k, where
// `s` is the memory stride of the active axis (1 for x, grid stride for y).

#include <algorithm>
#include <cstddef>

namespace adrfire::stencil {

using Stride = std::ptrdiff_t;

/// Second-order central difference.
inline double central(const double* p, Stride s, double inv_dx) {
  return 0.5 * (p[s] - p[-s]) * inv_dx;
}

/// Face-flux divergence of K grad T along one axis, arithmetic-mean face K.
inline double diffusion(const double* T, const double* K, Stride s, double inv_dx2) {
  const double k_hi = 0.5 * (K[0] + K[s]);
  const double k_lo = 0.5 * (K[-s] + K[0]);
  return (k_hi * (T[s] - T[0]) - k_lo * (T[0] - T[-s])) * inv_dx2;
}

/// Donor-cell derivative for the non-conservative term vel * df/dx.
inline double upwind(const double* f, Stride s, double vel, double inv_dx) {
  if (vel > 0.0) return vel * (f[0] - f[-s]) * inv_dx;
  if (vel < 0.0) return vel * (f[s] - f[0]) * inv_dx;
  return 0.0;
}

/// Relative regularisation of the smoothness indicators.
inline constexpr double kWenoEpsRel = 1e-6;
inline constexpr double kWenoEpsFloor = 1e-99;

/// Jiang-Shu WENO5 combination of five consecutive one-sided differences.
/// `linear` selects the ideal weights (0.1, 0.6, 0.3) instead of the
/// nonlinear ones; used to isolate the fifth-order linear stencil.
inline double weno5_combine(double v1, double v2, double v3, double v4, double v5,
                            bool linear = false) {
  const double q1 = v1 / 3.0 - 7.0 * v2 / 6.0 + 11.0 * v3 / 6.0;
  const double q2 = -v2 / 6.0 + 5.0 * v3 / 6.0 + v4 / 3.0;
  const double q3 = v3 / 3.0 + 5.0 * v4 / 6.0 - v5 / 6.0;
  if (linear) return 0.1 * q1 + 0.6 * q2 + 0.3 * q3;

  const double b1 = 13.0 / 12.0 * (v1 - 2.0 * v2 + v3) * (v1 - 2.0 * v2 + v3) +
                    0.25 * (v1 - 4.0 * v2 + 3.0 * v3) * (v1 - 4.0 * v2 + 3.0 * v3);
  const double b2 = 13.0 / 12.0 * (v2 - 2.0 * v3 + v4) * (v2 - 2.0 * v3 + v4) +
                    0.25 * (v2 - v4) * (v2 - v4);
  const double b3 = 13.0 / 12.0 * (v3 - 2.0 * v4 + v5) * (v3 - 2.0 * v4 + v5) +
                    0.25 * (3.0 * v3 - 4.0 * v4 + v5) * (3.0 * v3 - 4.0 * v4 + v5);

  const double scale = std::max({v1 * v1, v2 * v2, v3 * v3, v4 * v4, v5 * v5});
  const double eps = kWenoEpsRel * scale + kWenoEpsFloor;

  const double a1 = 0.1 / ((eps + b1) * (eps + b1));
  const double a2 = 0.6 / ((eps + b2) * (eps + b2));
  const double a3 = 0.3 / ((eps + b3) * (eps + b3));
  return (a1 * q1 + a2 * q2 + a3 * q3) / (a1 + a2 + a3);
}

/// Left-biased derivative (information from the low side), stencil -3..+2.
inline double weno5_minus(const double* f, Stride s, double inv_dx, bool linear = false) {
  const double v1 = (f[-2 * s] - f[-3 * s]) * inv_dx;
  const double v2 = (f[-s] - f[-2 * s]) * inv_dx;
  const double v3 = (f[0] - f[-s]) * inv_dx;
  const double v4 = (f[s] - f[0]) * inv_dx;
  const double v5 = (f[2 * s] - f[s]) * inv_dx;
  return weno5_combine(v1, v2, v3, v4, v5, linear);
}

/// Right-biased derivative, stencil -2..+3.
inline double weno5_plus(const double* f, Stride s, double inv_dx, bool linear = false) {
  const double v1 = (f[3 * s] - f[2 * s]) * inv_dx;
  const double v2 = (f[2 * s] - f[s]) * inv_dx;
  const double v3 = (f[s] - f[0]) * inv_dx;
  const double v4 = (f[0] - f[-s]) * inv_dx;
  const double v5 = (f[-s] - f[-2 * s]) * inv_dx;
  return weno5_combine(v1, v2, v3, v4, v5, linear);
}

inline double weno5(const double* f, Stride s, double vel, double inv_dx) {
  if (vel > 0.0) return vel * weno5_minus(f, s, inv_dx);
  if (vel < 0.0) return vel * weno5_plus(f, s, inv_dx);
  return 0.0;
}

}  // namespace adrfire::stencil
