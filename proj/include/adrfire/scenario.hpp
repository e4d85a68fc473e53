#pragma once

// Scenario assembly: grid, physics, advection source, initial data.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adrfire/grid.hpp"
#include "adrfire/integrator.hpp"
#include "adrfire/physics.hpp"

namespace adrfire {

enum class InitialKind { HotSpotGaussian, HotStrip, UniformUnit };

std::string to_string(InitialKind k);

struct InitialConditionSpec {
  InitialKind kind = InitialKind::HotStrip;
  // HotSpotGaussian: T = T_inf + (peak - T_inf) exp(-|x - center|^2 / radius^2)
  Vec2 center{0.0, 0.0};
  double radius = 1.0;
  double peak = 1000.0;
  // HotStrip: T = strip_T for x in [strip_lo, strip_hi], T_inf elsewhere
  double strip_lo = 0.0;
  double strip_hi = 1.0;
  double strip_T = 1000.0;

  double fuel = 1.0;                ///< uniform Y0
  std::vector<double> fuel_raster;  ///< per-cell Y0 (row-major), overrides `fuel`
  double temperature_noise = 0.0;   ///< additive U[0, a) on T0 [K]
  double fuel_noise = 0.0;          ///< Y0 scaled by 1 - U[0, a), a < 1
};

enum class TerrainKind { Flat, Plane, Hill };

struct TerrainSpec {
  TerrainKind kind = TerrainKind::Flat;
  Vec2 slope{0.0, 0.0};  ///< Plane: Z = slope . x
  double height = 0.0;   ///< Hill: Z = height exp(-|x - center|^2 / width^2)
  Vec2 center{0.0, 0.0};
  double width = 1.0;
};

/// Exactly one of these supplies the advection field.
enum class AdvectionSource { None, Direct, TwoPhase, VirtualWind };

struct AdvectionSpec {
  AdvectionSource source = AdvectionSource::None;
  Vec2 velocity{0.0, 0.0};  ///< Direct
  Vec2 wind{0.0, 0.0};      ///< TwoPhase and VirtualWind
  TwoPhaseParameters two_phase;
  double beta = 1.0;
  double gamma = 0.0;
  TerrainSpec terrain;
};

enum class FrontMode { None, AlongX, Axes };

struct OutputPlan {
  double front_interval = 0.5;   ///< simulated time between front samples
  double raster_interval = 0.0;  ///< 0: initial and final rasters only
  bool rasters = true;
  bool pgm = true;
  FrontMode front = FrontMode::AlongX;
  std::optional<double> front_threshold;  ///< defaults to T_bar
  double fit_start = 0.5;                 ///< fit window start, fraction of t_end
};

struct Scenario {
  std::string name;
  Grid grid;
  BoundaryCondition bc_T = BoundaryCondition::all(BoundaryKind::DirichletAmbient);
  ModelParameters params;
  CombustionVariant combustion = CombustionVariant::ArrheniusHeaviside;
  AdvectionSpec advection;
  std::optional<MoistureParameters> moisture;
  InitialConditionSpec initial;
  SchemeConfig scheme;
  double t_end = 1.0;
  OutputPlan output;
  std::uint64_t seed = 1;
  bool reduced = false;  ///< reduced Weber preset: bound oracle recorded

  // Resolved fields.
  VectorField velocity;
  Field terrain;
  bool has_advection = false;

  double front_threshold() const { return output.front_threshold.value_or(params.T_bar); }
};

/// Parameters of the reduced Weber preset.
ModelParameters reduced_weber_parameters(double h);

/// Validates and resolves advection and terrain. Throws ScenarioError.
void resolve(Scenario& s);

FieldState initial_state(const Scenario& s);
System make_system(const Scenario& s);

/// Error with the config key path at fault.
class ScenarioError : public std::invalid_argument {
 public:
  ScenarioError(const std::string& path, const std::string& msg)
      : std::invalid_argument(path + ": " + msg), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace adrfire
