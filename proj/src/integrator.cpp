#include "adrfire/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "parallel.hpp"
#include "rhs_cell.hpp"

namespace adrfire {

std::string to_string(SpatialScheme s) { return s == SpatialScheme::WENO5 ? "weno5" : "upwind1"; }
std::string to_string(TemporalScheme s) { return s == TemporalScheme::SSPRK3 ? "ssprk3" : "euler"; }
std::string to_string(FuelUpdate f) {
  return f == FuelUpdate::ExactExponential ? "exact" : "coupled";
}

void SchemeConfig::validate() const {
  if (!(cfl > 0 && cfl <= 1)) throw std::invalid_argument("scheme.cfl must lie in (0, 1]");
  if (!(dt_max > 0)) throw std::invalid_argument("scheme.dt_max must be > 0");
}

void prepare_ghosts(FieldState& s, const System& sys) {
  fill_ghosts(s.T, sys.bc_T, sys.params.T_inf);
}

namespace {

void compute_diffusivity(const Field& T, const ModelParameters& p, Field& K) {
  const double* t = T.data();
  double* k = K.data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(T.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < n; ++q) k[q] = diffusivity_unchecked(t[q], p);
}

[[noreturn]] void report_non_finite(const Grid& g, const RhsOutput& out) {
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (!std::isfinite(out.dT(i, j)) || !std::isfinite(out.dY(i, j))) {
        std::ostringstream msg;
        msg << "non-finite right-hand side at cell (" << i << ", " << j << ")";
        throw NonFiniteError(msg.str(), i, j);
      }
    }
  }
  throw NonFiniteError("non-finite right-hand side", -1, -1);
}

// out = a * base + b * (cur + dt * r), Y sub-update per the fuel mode.
// `out` may alias `cur`; each cell is read before it is written.
long combine(FieldState& out, const FieldState& base, double a, const FieldState& cur, double b,
             const RhsOutput& r, double dt, FuelUpdate mode) {
  const Grid& g = out.grid();
  const std::ptrdiff_t nx = g.nx;
  const std::ptrdiff_t n = nx * g.ny;
  const bool exact = mode == FuelUpdate::ExactExponential;
  long clamps = 0;
#pragma omp parallel for schedule(static) reduction(+ : clamps)
  for (std::ptrdiff_t q = 0; q < n; ++q) {
    const std::size_t c = g.index(static_cast<int>(q % nx), static_cast<int>(q / nx));
    const double t_euler = cur.T.data()[c] + dt * r.dT.data()[c];
    const double y_sub = exact ? cur.Y.data()[c] * std::exp(-r.Psi.data()[c] * dt)
                               : cur.Y.data()[c] + dt * r.dY.data()[c];
    double t_new = b * t_euler;
    double y_new = b * y_sub;
    if (a != 0.0) {
      t_new += a * base.T.data()[c];
      y_new += a * base.Y.data()[c];
    }
    if (y_new < 0.0) {
      y_new = 0.0;
      ++clamps;
    }
    out.T.data()[c] = t_new;
    out.Y.data()[c] = y_new;
  }
  return clamps;
}

}  // namespace

void rhs(const FieldState& s, const System& sys, RhsOutput& out, Field& K) {
  const Grid& g = sys.grid;
  compute_diffusivity(s.T, sys.params, K);
  const detail::RhsContext ctx(s, sys, K);

  const std::ptrdiff_t nx = g.nx;
  const std::ptrdiff_t n = nx * g.ny;
  double* dT = out.dT.data();
  double* dY = out.dY.data();
  double* psi = out.Psi.data();
  bool bad = false;
#pragma omp parallel for schedule(static) reduction(|| : bad)
  for (std::ptrdiff_t q = 0; q < n; ++q) {
    const std::size_t c = g.index(static_cast<int>(q % nx), static_cast<int>(q / nx));
    const detail::CellRhs r = detail::rhs_cell(ctx, c);
    dT[c] = r.dT;
    dY[c] = r.dY;
    psi[c] = r.Psi;
    bad = bad || !std::isfinite(r.dT) || !std::isfinite(r.dY);
  }
  if (bad) report_non_finite(g, out);
}

RhsOutput rhs(const FieldState& s, const System& sys) {
  RhsOutput out(sys.grid);
  Field K(sys.grid);
  rhs(s, sys, out, K);
  return out;
}

Field step_fuel_exact(const Field& Y, const Field& Psi, double dt) {
  if (!(Y.grid() == Psi.grid())) throw std::invalid_argument("step_fuel_exact: grid mismatch");
  Field out = Y;
  detail::for_interior(Y.grid(), [&](int i, int j) { out(i, j) = Y(i, j) * std::exp(-Psi(i, j) * dt); });
  return out;
}

long step_euler(FieldState& s, double dt, const System& sys, StepWorkspace& ws) {
  prepare_ghosts(s, sys);
  rhs(s, sys, ws.r, ws.K);
  const long clamps = combine(s, s, 0.0, s, 1.0, ws.r, dt, sys.scheme.fuel_update);
  if (s.Theta) update_memory(*s.Theta, s.T);
  return clamps;
}

long step_ssprk3(FieldState& s, double dt, const System& sys, StepWorkspace& ws) {
  const FuelUpdate mode = sys.scheme.fuel_update;
  prepare_ghosts(s, sys);
  ws.start = s;
  const FieldState& u0 = ws.start;

  rhs(s, sys, ws.r, ws.K);
  long clamps = combine(s, u0, 0.0, s, 1.0, ws.r, dt, mode);

  prepare_ghosts(s, sys);
  rhs(s, sys, ws.r, ws.K);
  clamps += combine(s, u0, 0.75, s, 0.25, ws.r, dt, mode);

  prepare_ghosts(s, sys);
  rhs(s, sys, ws.r, ws.K);
  clamps += combine(s, u0, 1.0 / 3.0, s, 2.0 / 3.0, ws.r, dt, mode);

  if (s.Theta) update_memory(*s.Theta, s.T);
  return clamps;
}

long step(FieldState& s, double dt, const System& sys, StepWorkspace& ws) {
  return sys.scheme.temporal == TemporalScheme::SSPRK3 ? step_ssprk3(s, dt, sys, ws)
                                                       : step_euler(s, dt, sys, ws);
}

DtLimits stable_dt(const FieldState& s, const System& sys) {
  const Grid& g = sys.grid;
  const ModelParameters& p = sys.params;
  const std::ptrdiff_t nx = g.nx;
  const std::ptrdiff_t n = nx * g.ny;
  const double ix = 1.0 / g.dx, iy = 1.0 / g.dy;
  const bool two_d = g.dim == 2;
  const MoistureParameters* moist = sys.moisture ? &*sys.moisture : nullptr;

  double adv_rate = 0.0;
  double psi_max = 0.0;
  double heat_ratio = std::numeric_limits<double>::infinity();  // rho c_eff / K
#pragma omp parallel for schedule(static) reduction(max : adv_rate, psi_max) reduction(min : heat_ratio)
  for (std::ptrdiff_t q = 0; q < n; ++q) {
    const std::size_t c = g.index(static_cast<int>(q % nx), static_cast<int>(q / nx));
    const double T = s.T.data()[c];
    const double Y = s.Y.data()[c];
    const double theta = s.Theta ? s.Theta->data()[c] : T;
    if (sys.has_advection) {
      double a = std::abs(sys.velocity.x.data()[c]) * ix;
      if (two_d) a += std::abs(sys.velocity.y.data()[c]) * iy;
      adv_rate = std::max(adv_rate, a);
    }
    psi_max = std::max(psi_max, combustion_rate_unchecked(sys.combustion, T, theta, p));
    const double c_eff =
        moist ? effective_specific_heat_unchecked(T, Y, *moist, p.T_inf, p.T_bar) : p.c;
    heat_ratio = std::min(heat_ratio, p.rho * c_eff / diffusivity_unchecked(T, p));
  }

  const double inf = std::numeric_limits<double>::infinity();
  DtLimits lim{};
  lim.advective = adv_rate > 0 ? 1.0 / adv_rate : inf;
  lim.reaction = psi_max > 0 ? 1.0 / psi_max : inf;
  const double lap = two_d ? ix * ix + iy * iy : ix * ix;
  lim.diffusive = heat_ratio / (2.0 * lap);
  const double m = std::min({lim.advective, lim.diffusive, lim.reaction});
  lim.dt = std::isfinite(m) && m > 0 ? std::min(sys.scheme.cfl * m, sys.scheme.dt_max)
                                     : sys.scheme.dt_max;
  return lim;
}

namespace reference {

void rhs(const FieldState& s, const System& sys, RhsOutput& out, Field& K) {
  const Grid& g = sys.grid;
  for (std::size_t q = 0; q < s.T.size(); ++q) K.data()[q] = diffusivity_unchecked(s.T.data()[q], sys.params);
  const detail::RhsContext ctx(s, sys, K);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t c = g.index(i, j);
      const detail::CellRhs r = detail::rhs_cell(ctx, c);
      out.dT.data()[c] = r.dT;
      out.dY.data()[c] = r.dY;
      out.Psi.data()[c] = r.Psi;
    }
  }
}

}  // namespace reference

}  // namespace adrfire
