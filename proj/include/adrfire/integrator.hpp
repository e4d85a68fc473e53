#pragma once

// Semi-discrete right-hand side of the coupled temperature/fuel system and
// the explicit steppers that advance it.

#include <optional>
#include <stdexcept>
#include <string>

#include "adrfire/grid.hpp"
#include "adrfire/operators.hpp"
#include "adrfire/physics.hpp"

namespace adrfire {

enum class TemporalScheme { Euler, SSPRK3 };
enum class FuelUpdate { CoupledExplicit, ExactExponential };

std::string to_string(SpatialScheme s);
std::string to_string(TemporalScheme s);
std::string to_string(FuelUpdate f);

struct SchemeConfig {
  SpatialScheme spatial = SpatialScheme::Upwind1;
  TemporalScheme temporal = TemporalScheme::Euler;
  double cfl = 0.4;
  FuelUpdate fuel_update = FuelUpdate::CoupledExplicit;
  double dt_max = 1.0;  ///< cap, and the answer when no mechanism limits dt

  void validate() const;
};

/// Temperature, fuel fraction and (for the memory model) the running maximum
/// of temperature, all on one grid.
struct FieldState {
  Field T;
  Field Y;
  std::optional<Field> Theta;

  explicit FieldState(const Grid& g, bool with_memory = false)
      : T(g), Y(g), Theta(with_memory ? std::optional<Field>(Field(g)) : std::nullopt) {}

  const Grid& grid() const { return T.grid(); }
  bool operator==(const FieldState&) const = default;
};

/// Everything the right-hand side needs besides the state.
struct System {
  Grid grid;
  ModelParameters params;
  CombustionVariant combustion = CombustionVariant::ArrheniusHeaviside;
  std::optional<MoistureParameters> moisture;
  VectorField velocity;        ///< advection field, constant in time
  bool has_advection = false;  ///< skip the advection stencil when v == 0
  BoundaryCondition bc_T = BoundaryCondition::all(BoundaryKind::DirichletAmbient);
  SchemeConfig scheme;

  explicit System(const Grid& g) : grid(g), velocity(g) {}
  bool uses_memory() const { return combustion == CombustionVariant::LinearizedMemory; }
};

struct RhsOutput {
  Field dT;
  Field dY;
  Field Psi;

  explicit RhsOutput(const Grid& g) : dT(g), dY(g), Psi(g) {}
};

/// Thrown when a field value stops being finite. Carries the cell.
class NonFiniteError : public std::runtime_error {
 public:
  NonFiniteError(const std::string& what, int i, int j)
      : std::runtime_error(what), i_(i), j_(j) {}
  int i() const { return i_; }
  int j() const { return j_; }

 private:
  int i_;
  int j_;
};

/// Scratch storage reused across steps.
struct StepWorkspace {
  RhsOutput r;
  Field K;
  FieldState start;

  StepWorkspace(const Grid& g, bool with_memory) : r(g), K(g), start(g, with_memory) {}
};

/// Fills the ghost halo of T (Dirichlet value T_inf) before an RHS call.
void prepare_ghosts(FieldState& s, const System& sys);

/// dT/dt, dY/dt and Psi at every interior cell. T ghosts must be filled.
/// `K` is scratch for the cell diffusivities.
void rhs(const FieldState& s, const System& sys, RhsOutput& out, Field& K);
RhsOutput rhs(const FieldState& s, const System& sys);

/// Y * exp(-Psi dt) at every interior cell.
Field step_fuel_exact(const Field& Y, const Field& Psi, double dt);

/// Forward Euler on (T, Y), memory updated afterwards. Returns the number of
/// cells where Y had to be clamped at zero.
long step_euler(FieldState& s, double dt, const System& sys, StepWorkspace& ws);

/// Three-stage Shu-Osher SSPRK3; memory updated once from the final T.
long step_ssprk3(FieldState& s, double dt, const System& sys, StepWorkspace& ws);

long step(FieldState& s, double dt, const System& sys, StepWorkspace& ws);

struct DtLimits {
  double advective;  ///< infinity when v == 0
  double diffusive;
  double reaction;   ///< infinity when Psi == 0 everywhere
  double dt;         ///< cfl * min of the three, capped by dt_max
};

/// CFL-type step bound from advection, diffusion and reaction rates.
DtLimits stable_dt(const FieldState& s, const System& sys);

namespace reference {

/// Serial RHS with the same per-cell arithmetic as adrfire::rhs.
void rhs(const FieldState& s, const System& sys, RhsOutput& out, Field& K);

}  // namespace reference

}  // namespace adrfire
