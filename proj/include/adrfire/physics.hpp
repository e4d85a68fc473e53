#pragma once

// Pointwise closures of the advection-diffusion-reaction fire model.
//
// Everything here is a pure function of its arguments. The checked entry
// points (no suffix) validate their inputs and throw; the *_unchecked
// variants are what the grid kernels call inside OpenMP regions, where an
// exception must not escape.

#include <array>
#include <cmath>
#include <string>

namespace adrfire {

/// Physical constants of the bulk temperature / fuel system. SI units.
///
/// `h` is the Newton cooling coefficient in W/(m^3 K); the energy equation
/// divides it by rho*c. The reduced Weber preset sets rho = c = 1, so there
/// `h` is already the rate in 1/s.
struct ModelParameters {
  double rho = 1.0;       ///< bulk density [kg/m^3]
  double c = 1.0;         ///< bulk specific heat [J/(kg K)]
  double k = 1.0;         ///< heat conduction coefficient [W/(m K)]
  double epsilon = 0.0;   ///< emissivity factor [-]
  double delta = 0.0;     ///< optical path length [m]
  double sigma = 5.670374419e-8;  ///< Stefan-Boltzmann constant [W/(m^2 K^4)]
  double h = 0.5;         ///< heat exchange coefficient [W/(m^3 K)]
  double T_inf = 300.0;   ///< ambient temperature [K]
  double S = 1.0e4;       ///< heating value [J/kg]
  double A = 1.0;         ///< Arrhenius pre-exponential factor [1/s]
  double T_ac = 400.0;    ///< activation temperature [K]
  double T_bar = 400.0;   ///< ignition temperature [K]
  double A_L = 2.0e-4;    ///< linearized rate coefficient [1/(s K)]
  double Psi_const = 0.05;  ///< constant-factor combustion rate [1/s]

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

/// Fuel/gas two-phase mixture used for the bulk advection velocity.
struct TwoPhaseParameters {
  double R_f = 0.1;       ///< fuel volume fraction [-]
  double rho_a = 1.2;     ///< gas density [kg/m^3]
  double rho_f = 500.0;   ///< solid density [kg/m^3]
  double cp_a = 1000.0;   ///< gas specific heat [J/(kg K)]
  double cp_f = 1800.0;   ///< solid specific heat [J/(kg K)]

  void validate() const;
};

/// Simplest apparent-heat-capacity moisture model.
struct MoistureParameters {
  double M = 0.0;          ///< moisture content m_w / m_0 [-]
  double c_w = 4186.0;     ///< specific heat of water [J/(kg K)]
  double L_w = 2.26e6;     ///< latent heat of evaporation [J/kg]
  double T_w = 373.15;     ///< evaporation temperature [K]
  double cp_f0 = 1800.0;   ///< dry-fuel specific heat [J/(kg K)]
  double Y_tol = 1e-9;     ///< fuel counts as unburned when Y >= 1 - Y_tol

  /// T_w must lie strictly between the ambient and ignition temperatures.
  void validate(double T_inf, double T_bar) const;
};

enum class CombustionVariant { ArrheniusHeaviside, LinearizedMemory, ConstantFactor };

std::string to_string(CombustionVariant v);
CombustionVariant combustion_from_string(const std::string& s);

using Vec2 = std::array<double, 2>;

// ---------------------------------------------------------------------------
// Unchecked kernels

inline double diffusivity_unchecked(double T, const ModelParameters& p) {
  return p.k + 4.0 * p.epsilon * p.delta * p.sigma * T * T * T;
}

inline double arrhenius_unchecked(double T, const ModelParameters& p) {
  if (T < p.T_bar) return 0.0;
  return p.A * std::exp(-p.T_ac / T);
}

inline double linearized_unchecked(double T, double Theta, const ModelParameters& p) {
  if (Theta < p.T_bar) return 0.0;
  const double excess = T - p.T_inf;
  return excess > 0.0 ? p.A_L * excess : 0.0;
}

inline double constant_unchecked(double T, const ModelParameters& p) {
  return T < p.T_bar ? 0.0 : p.Psi_const;
}

inline double combustion_rate_unchecked(CombustionVariant v, double T, double Theta,
                                        const ModelParameters& p) {
  switch (v) {
    case CombustionVariant::ArrheniusHeaviside: return arrhenius_unchecked(T, p);
    case CombustionVariant::LinearizedMemory: return linearized_unchecked(T, Theta, p);
    case CombustionVariant::ConstantFactor: return constant_unchecked(T, p);
  }
  return 0.0;
}

inline double effective_specific_heat_unchecked(double T, double Y, const MoistureParameters& m,
                                                double T_inf, double T_bar) {
  if (T < T_bar && Y >= 1.0 - m.Y_tol)
    return m.cp_f0 + m.M * (m.c_w * (m.T_w - T_inf) + m.L_w) / (T_bar - T_inf);
  return m.cp_f0;
}

inline double energy_source_unchecked(double T, double Y, double Psi, const ModelParameters& p,
                                      double c_eff) {
  return (p.rho * Psi * p.S * Y - p.h * (T - p.T_inf)) / (p.rho * c_eff);
}

// ---------------------------------------------------------------------------
// Checked entry points

/// K(T) = k + 4 eps delta sigma T^3.
double diffusivity(double T, const ModelParameters& p);

/// A H(T - T_bar) exp(-T_ac / T). Rejects T <= 0.
double combustion_arrhenius(double T, const ModelParameters& p);

/// A_L H(Theta - T_bar) (T - T_inf); keeps burning after T drops below T_bar.
double combustion_linearized(double T, double Theta, const ModelParameters& p);

double combustion_constant(double T, const ModelParameters& p);

/// Temperature tendency of the reaction and cooling terms, (rho Psi S Y - h (T - T_inf)) / (rho c_eff).
double energy_source(double T, double Y, double Psi, const ModelParameters& p, double c_eff);

/// Bulk advection velocity of the two-phase continuum.
Vec2 bulk_velocity(const Vec2& w, const TwoPhaseParameters& tp);

/// The scalar in front of w in bulk_velocity; lies in [0, 1].
double bulk_velocity_factor(const TwoPhaseParameters& tp);

/// beta w + gamma grad Z.
Vec2 virtual_wind(const Vec2& w, const Vec2& gradZ, double beta, double gamma);

double effective_specific_heat(double T, double Y, const MoistureParameters& mp, double T_inf,
                               double T_bar);

}  // namespace adrfire
