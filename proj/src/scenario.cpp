#include "adrfire/scenario.hpp"

#include <cmath>
#include <random>

#include "adrfire/operators.hpp"

namespace adrfire {

std::string to_string(InitialKind k) {
  switch (k) {
    case InitialKind::HotSpotGaussian: return "hot_spot";
    case InitialKind::HotStrip: return "hot_strip";
    case InitialKind::UniformUnit: return "uniform_unit";
  }
  return "?";
}

ModelParameters reduced_weber_parameters(double h) {
  ModelParameters p;
  p.rho = p.c = p.k = 1.0;
  p.A = p.S = p.T_ac = 1.0;
  p.epsilon = 0.0;
  p.T_bar = p.T_inf = 0.0;
  p.h = h;
  return p;
}

namespace {

template <class F>
void wrap(const char* path, F f) {
  try {
    f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(path, e.what());
  }
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Field build_terrain(const Grid& g, const TerrainSpec& t) {
  Field z(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x(i), y = g.dim == 2 ? g.y(j) : 0.0;
      switch (t.kind) {
        case TerrainKind::Flat: break;
        case TerrainKind::Plane: z(i, j) = t.slope[0] * x + t.slope[1] * y; break;
        case TerrainKind::Hill: {
          const double dx = x - t.center[0], dy = y - t.center[1];
          z(i, j) = t.height * std::exp(-(dx * dx + dy * dy) / (t.width * t.width));
          break;
        }
      }
    }
  }
  fill_ghosts(z, BoundaryCondition::all(BoundaryKind::NeumannZeroFlux), 0.0);
  return z;
}

}  // namespace

void resolve(Scenario& s) {
  wrap("grid", [&] { s.grid.validate(); });
  wrap("params", [&] { s.params.validate(); });
  wrap("scheme", [&] { s.scheme.validate(); });
  if (!(s.t_end >= 0) || !std::isfinite(s.t_end)) throw ScenarioError("t_end", "must be >= 0");
  if (s.moisture) wrap("moisture", [&] { s.moisture->validate(s.params.T_inf, s.params.T_bar); });

  const OutputPlan& o = s.output;
  if (!(o.front_interval > 0)) throw ScenarioError("output.front_interval", "must be > 0");
  if (!(o.raster_interval >= 0)) throw ScenarioError("output.raster_interval", "must be >= 0");
  if (!(o.fit_start >= 0 && o.fit_start < 1)) throw ScenarioError("output.fit_start", "must lie in [0, 1)");
  if (o.front == FrontMode::Axes && s.grid.dim != 2)
    throw ScenarioError("output.front", "axes mode needs a 2D grid");

  const InitialConditionSpec& ic = s.initial;
  const double T_inf = s.params.T_inf;
  switch (ic.kind) {
    case InitialKind::HotSpotGaussian:
      if (!(ic.peak >= T_inf)) throw ScenarioError("initial.peak", "T0 < T_inf");
      if (!(ic.radius > 0)) throw ScenarioError("initial.radius", "must be > 0");
      break;
    case InitialKind::HotStrip:
      if (!(ic.strip_T >= T_inf)) throw ScenarioError("initial.strip_T", "T0 < T_inf");
      if (!(ic.strip_lo <= ic.strip_hi)) throw ScenarioError("initial.strip_lo", "must be <= strip_hi");
      break;
    case InitialKind::UniformUnit:
      if (!(1.0 >= T_inf)) throw ScenarioError("initial.kind", "uniform_unit needs T_inf <= 1");
      break;
  }
  if (!(ic.temperature_noise >= 0)) throw ScenarioError("initial.temperature_noise", "must be >= 0");
  if (!(ic.fuel_noise >= 0 && ic.fuel_noise < 1)) throw ScenarioError("initial.fuel_noise", "must lie in [0, 1)");
  if (ic.fuel_raster.empty()) {
    if (!(ic.fuel > 0)) throw ScenarioError("initial.fuel", "Y0 must be > 0");
  } else {
    if (ic.fuel_raster.size() != s.grid.interior_cells())
      throw ScenarioError("initial.fuel_raster", "size does not match the grid");
    for (double y : ic.fuel_raster)
      if (!(y > 0)) throw ScenarioError("initial.fuel_raster", "Y0 must be > 0");
  }

  AdvectionSpec& a = s.advection;
  s.velocity = VectorField(s.grid);
  s.terrain = Field(s.grid);
  Vec2 v{0.0, 0.0};
  switch (a.source) {
    case AdvectionSource::None: break;
    case AdvectionSource::Direct: v = a.velocity; break;
    case AdvectionSource::TwoPhase:
      wrap("two_phase", [&] { v = bulk_velocity(a.wind, a.two_phase); });
      break;
    case AdvectionSource::VirtualWind: {
      if (!std::isfinite(a.beta) || !std::isfinite(a.gamma))
        throw ScenarioError("virtual_wind", "beta and gamma must be finite");
      s.terrain = build_terrain(s.grid, a.terrain);
      const VectorField gz = terrain_gradient(s.terrain);
      for (int j = 0; j < s.grid.ny; ++j) {
        for (int i = 0; i < s.grid.nx; ++i) {
          const Vec2 w = virtual_wind(a.wind, {gz.x(i, j), gz.y(i, j)}, a.beta, a.gamma);
          s.velocity.x(i, j) = w[0];
          s.velocity.y(i, j) = s.grid.dim == 2 ? w[1] : 0.0;
        }
      }
      break;
    }
  }
  if (a.source != AdvectionSource::VirtualWind) {
    if (s.grid.dim == 1) v[1] = 0.0;
    s.velocity = VectorField(s.grid, v[0], v[1]);
  }
  s.has_advection = false;
  for (int j = 0; j < s.grid.ny; ++j)
    for (int i = 0; i < s.grid.nx; ++i)
      if (s.velocity.x(i, j) != 0.0 || s.velocity.y(i, j) != 0.0) s.has_advection = true;
  if (s.reduced && s.has_advection) throw ScenarioError("reduced", "reduced preset has v = 0");
}

FieldState initial_state(const Scenario& s) {
  const Grid& g = s.grid;
  const ModelParameters& p = s.params;
  const InitialConditionSpec& ic = s.initial;
  FieldState st(g, s.combustion == CombustionVariant::LinearizedMemory);
  std::mt19937_64 rng(s.seed);
  const bool noisy = ic.temperature_noise > 0 || ic.fuel_noise > 0;

  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x(i), y = g.dim == 2 ? g.y(j) : 0.0;
      double T = p.T_inf, Y = ic.fuel;
      switch (ic.kind) {
        case InitialKind::HotSpotGaussian: {
          const double dx = x - ic.center[0], dy = y - ic.center[1];
          T = p.T_inf + (ic.peak - p.T_inf) * std::exp(-(dx * dx + dy * dy) / (ic.radius * ic.radius));
          break;
        }
        case InitialKind::HotStrip:
          if (x >= ic.strip_lo && x <= ic.strip_hi) T = ic.strip_T;
          break;
        case InitialKind::UniformUnit:
          T = 1.0;
          Y = 1.0;
          break;
      }
      if (!ic.fuel_raster.empty()) Y = ic.fuel_raster[static_cast<std::size_t>(j) * g.nx + i];
      if (noisy) {
        const double uT = uniform01(rng), uY = uniform01(rng);
        T += ic.temperature_noise * uT;
        Y *= 1.0 - ic.fuel_noise * uY;
      }
      st.T(i, j) = T;
      st.Y(i, j) = Y;
    }
  }
  fill_ghosts(st.T, s.bc_T, p.T_inf);
  fill_ghosts(st.Y, BoundaryCondition::all(BoundaryKind::NeumannZeroFlux), 0.0);
  if (st.Theta) *st.Theta = st.T;
  return st;
}

System make_system(const Scenario& s) {
  System sys(s.grid);
  sys.params = s.params;
  sys.combustion = s.combustion;
  sys.moisture = s.moisture;
  sys.velocity = s.velocity;
  sys.has_advection = s.has_advection;
  sys.bc_T = s.bc_T;
  sys.scheme = s.scheme;
  return sys;
}

}  // namespace adrfire
