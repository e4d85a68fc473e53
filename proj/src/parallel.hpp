#pragma once

#include <cstddef>

#include "adrfire/grid.hpp"

namespace adrfire::detail {

// Runs body(i, j) over every interior cell. The flattened loop keeps 1D
// grids and thin 2D strips load-balanced.
template <class Body>
void for_interior(const Grid& g, Body&& body) {
  const std::ptrdiff_t nx = g.nx;
  const std::ptrdiff_t n = nx * g.ny;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < n; ++q) body(static_cast<int>(q % nx), static_cast<int>(q / nx));
}

}  // namespace adrfire::detail
