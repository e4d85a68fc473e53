#pragma once

// Spatial operators on uniform grids, OpenMP-parallel over interior cells.
//
// All operators read ghost cells of their inputs (fill them first) and write
// interior cells of a distinct output; output ghosts are left at zero. Cells
// are independent, so results do not depend on the thread count.

#include "adrfire/grid.hpp"

namespace adrfire {

enum class SpatialScheme { Upwind1, WENO5 };

VectorField gradient_central(const Field& f);

/// div(K grad T) in conservative face-flux form.
Field diffusion_variable_K(const Field& T, const Field& K);

/// v . grad f, first-order donor cell.
Field advect_upwind(const Field& f, const VectorField& v);

/// v . grad f with WENO5 one-sided derivatives. Needs ghost width >= 3.
Field advect_weno5(const Field& f, const VectorField& v);

Field advect(const Field& f, const VectorField& v, SpatialScheme scheme);

/// Slope field of a terrain elevation raster. Central differences inside,
/// one-sided at the outermost cells, so planes are reproduced exactly.
VectorField terrain_gradient(const Field& Z);

namespace reference {

// Serial counterparts of the operators above, kept for parity tests and as
// the baseline in the benchmark.
VectorField gradient_central(const Field& f);
Field diffusion_variable_K(const Field& T, const Field& K);
Field advect_upwind(const Field& f, const VectorField& v);
Field advect_weno5(const Field& f, const VectorField& v);
VectorField terrain_gradient(const Field& Z);

}  // namespace reference

}  // namespace adrfire
