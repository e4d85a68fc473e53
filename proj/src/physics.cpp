#include "adrfire/physics.hpp"

#include <stdexcept>

namespace adrfire {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::invalid_argument(what);
}

}  // namespace

void ModelParameters::validate() const {
  for (double x : {rho, c, k, epsilon, delta, sigma, h, T_inf, S, A, T_ac, T_bar, A_L, Psi_const})
    require_finite(x, "model parameters must be finite");
  require(rho > 0, "params.rho must be > 0");
  require(c > 0, "params.c must be > 0");
  require(k > 0, "params.k must be > 0");
  require(sigma > 0, "params.sigma must be > 0");
  require(epsilon >= 0, "params.epsilon must be >= 0");
  require(delta >= 0, "params.delta must be >= 0");
  require(h >= 0, "params.h must be >= 0");
  require(T_inf >= 0, "params.T_inf must be >= 0");
  require(T_bar >= 0, "params.T_bar must be >= 0");
  require(T_ac > 0, "params.T_ac must be > 0");
  // A = 0 and A_L = 0 switch combustion off; used by the pure-decay checks.
  require(A >= 0, "params.A must be >= 0");
  require(A_L >= 0, "params.A_L must be >= 0");
  require(Psi_const >= 0, "params.Psi_const must be >= 0");
  require(S >= 0, "params.S must be >= 0");
}

void TwoPhaseParameters::validate() const {
  require(R_f >= 0 && R_f <= 1, "two_phase.R_f must lie in [0, 1]");
  require(rho_a > 0 && rho_f > 0, "two_phase densities must be > 0");
  require(cp_a > 0 && cp_f > 0, "two_phase specific heats must be > 0");
}

void MoistureParameters::validate(double T_inf, double T_bar) const {
  require(std::isfinite(M) && M >= 0, "moisture.M must be >= 0");
  require(c_w > 0 && L_w > 0 && cp_f0 > 0, "moisture.c_w, L_w, cp_f0 must be > 0");
  require(Y_tol > 0 && Y_tol < 1e-2, "moisture.Y_tol must lie in (0, 1e-2)");
  require(T_bar > T_inf, "moisture model needs T_bar > T_inf");
  require(T_inf < T_w && T_w < T_bar, "moisture.T_w must lie strictly between T_inf and T_bar");
}

std::string to_string(CombustionVariant v) {
  switch (v) {
    case CombustionVariant::ArrheniusHeaviside: return "arrhenius";
    case CombustionVariant::LinearizedMemory: return "linearized";
    case CombustionVariant::ConstantFactor: return "constant";
  }
  return "?";
}

CombustionVariant combustion_from_string(const std::string& s) {
  if (s == "arrhenius") return CombustionVariant::ArrheniusHeaviside;
  if (s == "linearized") return CombustionVariant::LinearizedMemory;
  if (s == "constant") return CombustionVariant::ConstantFactor;
  throw std::invalid_argument("unknown combustion variant '" + s +
                              "' (expected arrhenius | linearized | constant)");
}

double diffusivity(double T, const ModelParameters& p) {
  require_finite(T, "diffusivity: non-finite temperature");
  return diffusivity_unchecked(T, p);
}

double combustion_arrhenius(double T, const ModelParameters& p) {
  require_finite(T, "combustion_arrhenius: non-finite temperature");
  if (T <= 0) throw std::domain_error("combustion_arrhenius: T must be > 0");
  return arrhenius_unchecked(T, p);
}

double combustion_linearized(double T, double Theta, const ModelParameters& p) {
  require_finite(T, "combustion_linearized: non-finite temperature");
  require_finite(Theta, "combustion_linearized: non-finite memory temperature");
  return linearized_unchecked(T, Theta, p);
}

double combustion_constant(double T, const ModelParameters& p) {
  require_finite(T, "combustion_constant: non-finite temperature");
  return constant_unchecked(T, p);
}

double energy_source(double T, double Y, double Psi, const ModelParameters& p, double c_eff) {
  if (!(c_eff > 0)) throw std::invalid_argument("energy_source: effective specific heat must be > 0");
  return energy_source_unchecked(T, Y, Psi, p, c_eff);
}

double bulk_velocity_factor(const TwoPhaseParameters& tp) {
  const double gas = tp.rho_a * tp.cp_a * (1.0 - tp.R_f);
  const double denom = tp.rho_f * tp.cp_f * tp.R_f + gas;
  if (!(denom > 0)) throw std::invalid_argument("bulk_velocity: vanishing heat-capacity denominator");
  return gas / denom;
}

Vec2 bulk_velocity(const Vec2& w, const TwoPhaseParameters& tp) {
  tp.validate();
  const double f = bulk_velocity_factor(tp);
  return {f * w[0], f * w[1]};
}

Vec2 virtual_wind(const Vec2& w, const Vec2& gradZ, double beta, double gamma) {
  return {beta * w[0] + gamma * gradZ[0], beta * w[1] + gamma * gradZ[1]};
}

double effective_specific_heat(double T, double Y, const MoistureParameters& mp, double T_inf,
                               double T_bar) {
  if (!(T_bar > T_inf))
    throw std::invalid_argument("effective_specific_heat: T_bar must exceed T_inf");
  return effective_specific_heat_unchecked(T, Y, mp, T_inf, T_bar);
}

}  // namespace adrfire
