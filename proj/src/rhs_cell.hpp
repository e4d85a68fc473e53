#pragma once

// Per-cell right-hand side shared by the parallel and reference RHS.

#include <cstddef>

#include "adrfire/integrator.hpp"
#include "adrfire/stencils.hpp"

namespace adrfire::detail {

struct RhsContext {
  const double* T;
  const double* Y;
  const double* Theta;  // null unless the memory model is active
  const double* K;
  const double* vx;
  const double* vy;
  std::ptrdiff_t sy;
  double ix, iy, ix2, iy2;
  bool two_d;
  bool advect;
  SpatialScheme scheme;
  CombustionVariant combustion;
  const ModelParameters* p;
  const MoistureParameters* moisture;  // null when the plain c applies

  RhsContext(const FieldState& s, const System& sys, const Field& K)
      : T(s.T.data()),
        Y(s.Y.data()),
        Theta(s.Theta ? s.Theta->data() : nullptr),
        K(K.data()),
        vx(sys.velocity.x.data()),
        vy(sys.velocity.y.data()),
        sy(sys.grid.stride()),
        ix(1.0 / sys.grid.dx),
        iy(1.0 / sys.grid.dy),
        ix2(1.0 / (sys.grid.dx * sys.grid.dx)),
        iy2(1.0 / (sys.grid.dy * sys.grid.dy)),
        two_d(sys.grid.dim == 2),
        advect(sys.has_advection),
        scheme(sys.scheme.spatial),
        combustion(sys.combustion),
        p(&sys.params),
        moisture(sys.moisture ? &*sys.moisture : nullptr) {}
};

struct CellRhs {
  double dT;
  double dY;
  double Psi;
};

inline double cell_specific_heat(const RhsContext& ctx, double T, double Y) {
  return ctx.moisture
             ? effective_specific_heat_unchecked(T, Y, *ctx.moisture, ctx.p->T_inf, ctx.p->T_bar)
             : ctx.p->c;
}

inline CellRhs rhs_cell(const RhsContext& ctx, std::size_t c) {
  const double T = ctx.T[c];
  const double Y = ctx.Y[c];
  const double theta = ctx.Theta ? ctx.Theta[c] : T;
  const double psi = combustion_rate_unchecked(ctx.combustion, T, theta, *ctx.p);

  double diff = stencil::diffusion(ctx.T + c, ctx.K + c, 1, ctx.ix2);
  if (ctx.two_d) diff += stencil::diffusion(ctx.T + c, ctx.K + c, ctx.sy, ctx.iy2);

  double adv = 0.0;
  if (ctx.advect) {
    if (ctx.scheme == SpatialScheme::WENO5) {
      adv = stencil::weno5(ctx.T + c, 1, ctx.vx[c], ctx.ix);
      if (ctx.two_d) adv += stencil::weno5(ctx.T + c, ctx.sy, ctx.vy[c], ctx.iy);
    } else {
      adv = stencil::upwind(ctx.T + c, 1, ctx.vx[c], ctx.ix);
      if (ctx.two_d) adv += stencil::upwind(ctx.T + c, ctx.sy, ctx.vy[c], ctx.iy);
    }
  }

  const double c_eff = cell_specific_heat(ctx, T, Y);
  const double dT = -adv + diff / (ctx.p->rho * c_eff) + energy_source_unchecked(T, Y, psi, *ctx.p, c_eff);
  return {dT, -psi * Y, psi};
}

}  // namespace adrfire::detail
