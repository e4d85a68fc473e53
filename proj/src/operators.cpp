#include "adrfire/operators.hpp"

#include <stdexcept>

#include "adrfire/stencils.hpp"
#include "parallel.hpp"

namespace adrfire {

namespace {

using detail::for_interior;

void require_same_grid(const Field& a, const Field& b, const char* what) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument(what);
}

}  // namespace

VectorField gradient_central(const Field& f) {
  const Grid& g = f.grid();
  VectorField out(g);
  const double ix = 1.0 / g.dx, iy = 1.0 / g.dy;
  const std::ptrdiff_t sy = g.stride();
  const double* p = f.data();
  for_interior(g, [&](int i, int j) {
    const std::size_t c = g.index(i, j);
    out.x.data()[c] = stencil::central(p + c, 1, ix);
    if (g.dim == 2) out.y.data()[c] = stencil::central(p + c, sy, iy);
  });
  return out;
}

Field diffusion_variable_K(const Field& T, const Field& K) {
  require_same_grid(T, K, "diffusion_variable_K: grid mismatch");
  const Grid& g = T.grid();
  Field out(g);
  const double ix2 = 1.0 / (g.dx * g.dx), iy2 = 1.0 / (g.dy * g.dy);
  const std::ptrdiff_t sy = g.stride();
  const double* t = T.data();
  const double* k = K.data();
  double* o = out.data();
  for_interior(g, [&](int i, int j) {
    const std::size_t c = g.index(i, j);
    double d = stencil::diffusion(t + c, k + c, 1, ix2);
    if (g.dim == 2) d += stencil::diffusion(t + c, k + c, sy, iy2);
    o[c] = d;
  });
  return out;
}

Field advect_upwind(const Field& f, const VectorField& v) {
  require_same_grid(f, v.x, "advect_upwind: grid mismatch");
  const Grid& g = f.grid();
  Field out(g);
  const double ix = 1.0 / g.dx, iy = 1.0 / g.dy;
  const std::ptrdiff_t sy = g.stride();
  const double* p = f.data();
  double* o = out.data();
  for_interior(g, [&](int i, int j) {
    const std::size_t c = g.index(i, j);
    double a = stencil::upwind(p + c, 1, v.x.data()[c], ix);
    if (g.dim == 2) a += stencil::upwind(p + c, sy, v.y.data()[c], iy);
    o[c] = a;
  });
  return out;
}

Field advect_weno5(const Field& f, const VectorField& v) {
  require_same_grid(f, v.x, "advect_weno5: grid mismatch");
  const Grid& g = f.grid();
  if (g.ghost < 3) throw std::invalid_argument("advect_weno5: ghost width must be >= 3");
  Field out(g);
  const double ix = 1.0 / g.dx, iy = 1.0 / g.dy;
  const std::ptrdiff_t sy = g.stride();
  const double* p = f.data();
  double* o = out.data();
  for_interior(g, [&](int i, int j) {
    const std::size_t c = g.index(i, j);
    double a = stencil::weno5(p + c, 1, v.x.data()[c], ix);
    if (g.dim == 2) a += stencil::weno5(p + c, sy, v.y.data()[c], iy);
    o[c] = a;
  });
  return out;
}

Field advect(const Field& f, const VectorField& v, SpatialScheme scheme) {
  return scheme == SpatialScheme::WENO5 ? advect_weno5(f, v) : advect_upwind(f, v);
}

VectorField terrain_gradient(const Field& Z) {
  const Grid& g = Z.grid();
  VectorField out(g);
  for_interior(g, [&](int i, int j) {
    const std::size_t c = g.index(i, j);
    if (i == 0)
      out.x.data()[c] = (Z(1, j) - Z(0, j)) / g.dx;
    else if (i == g.nx - 1)
      out.x.data()[c] = (Z(i, j) - Z(i - 1, j)) / g.dx;
    else
      out.x.data()[c] = 0.5 * (Z(i + 1, j) - Z(i - 1, j)) / g.dx;
    if (g.dim < 2) return;
    if (j == 0)
      out.y.data()[c] = (Z(i, 1) - Z(i, 0)) / g.dy;
    else if (j == g.ny - 1)
      out.y.data()[c] = (Z(i, j) - Z(i, j - 1)) / g.dy;
    else
      out.y.data()[c] = 0.5 * (Z(i, j + 1) - Z(i, j - 1)) / g.dy;
  });
  return out;
}

}  // namespace adrfire
