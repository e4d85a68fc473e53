// Serial reference operators. Straight nested loops, no OpenMP.

#include <stdexcept>

#include "adrfire/operators.hpp"
#include "adrfire/stencils.hpp"

namespace adrfire::reference {

VectorField gradient_central(const Field& f) {
  const Grid& g = f.grid();
  VectorField out(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t c = g.index(i, j);
      out.x.data()[c] = stencil::central(f.data() + c, 1, 1.0 / g.dx);
      if (g.dim == 2) out.y.data()[c] = stencil::central(f.data() + c, g.stride(), 1.0 / g.dy);
    }
  }
  return out;
}

Field diffusion_variable_K(const Field& T, const Field& K) {
  if (!(T.grid() == K.grid())) throw std::invalid_argument("diffusion_variable_K: grid mismatch");
  const Grid& g = T.grid();
  Field out(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t c = g.index(i, j);
      double d = stencil::diffusion(T.data() + c, K.data() + c, 1, 1.0 / (g.dx * g.dx));
      if (g.dim == 2)
        d += stencil::diffusion(T.data() + c, K.data() + c, g.stride(), 1.0 / (g.dy * g.dy));
      out(i, j) = d;
    }
  }
  return out;
}

Field advect_upwind(const Field& f, const VectorField& v) {
  const Grid& g = f.grid();
  Field out(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t c = g.index(i, j);
      double a = stencil::upwind(f.data() + c, 1, v.x(i, j), 1.0 / g.dx);
      if (g.dim == 2) a += stencil::upwind(f.data() + c, g.stride(), v.y(i, j), 1.0 / g.dy);
      out(i, j) = a;
    }
  }
  return out;
}

Field advect_weno5(const Field& f, const VectorField& v) {
  const Grid& g = f.grid();
  if (g.ghost < 3) throw std::invalid_argument("advect_weno5: ghost width must be >= 3");
  Field out(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t c = g.index(i, j);
      double a = stencil::weno5(f.data() + c, 1, v.x(i, j), 1.0 / g.dx);
      if (g.dim == 2) a += stencil::weno5(f.data() + c, g.stride(), v.y(i, j), 1.0 / g.dy);
      out(i, j) = a;
    }
  }
  return out;
}

VectorField terrain_gradient(const Field& Z) {
  const Grid& g = Z.grid();
  VectorField out(g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i == 0)
        out.x(i, j) = (Z(1, j) - Z(0, j)) / g.dx;
      else if (i == g.nx - 1)
        out.x(i, j) = (Z(i, j) - Z(i - 1, j)) / g.dx;
      else
        out.x(i, j) = 0.5 * (Z(i + 1, j) - Z(i - 1, j)) / g.dx;
      if (g.dim < 2) continue;
      if (j == 0)
        out.y(i, j) = (Z(i, 1) - Z(i, 0)) / g.dy;
      else if (j == g.ny - 1)
        out.y(i, j) = (Z(i, j) - Z(i, j - 1)) / g.dy;
      else
        out.y(i, j) = 0.5 * (Z(i, j + 1) - Z(i, j - 1)) / g.dy;
    }
  }
  return out;
}

}  // namespace adrfire::reference
