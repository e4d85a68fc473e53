#include "adrfire/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace adrfire {

Grid Grid::line(int nx, double dx, double x0) {
  Grid g;
  g.dim = 1;
  g.nx = nx;
  g.ny = 1;
  g.dx = dx;
  g.dy = dx;
  g.x0 = x0;
  g.validate();
  return g;
}

Grid Grid::plane(int nx, int ny, double dx, double dy, double x0, double y0) {
  Grid g;
  g.dim = 2;
  g.nx = nx;
  g.ny = ny;
  g.dx = dx;
  g.dy = dy;
  g.x0 = x0;
  g.y0 = y0;
  g.validate();
  return g;
}

void Grid::validate() const {
  if (dim != 1 && dim != 2) throw std::invalid_argument("grid.dim must be 1 or 2");
  if (nx < 1 || ny < 1) throw std::invalid_argument("grid cell counts must be >= 1");
  if (dim == 1 && ny != 1) throw std::invalid_argument("1D grid must have ny == 1");
  if (!(dx > 0) || !(dy > 0)) throw std::invalid_argument("grid spacing must be > 0");
  if (ghost < kGhost) throw std::invalid_argument("ghost width must be >= 3");
  if (nx < ghost || (dim == 2 && ny < ghost))
    throw std::invalid_argument("grid needs at least as many cells as ghost layers per axis");
}

void Field::fill(double value) { std::fill(v_.begin(), v_.end(), value); }

std::vector<double> Field::interior() const {
  std::vector<double> out;
  out.reserve(grid_.interior_cells());
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i < grid_.nx; ++i) out.push_back((*this)(i, j));
  return out;
}

double Field::interior_min() const {
  double m = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i < grid_.nx; ++i) m = std::min(m, (*this)(i, j));
  return m;
}

double Field::interior_max() const {
  double m = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i < grid_.nx; ++i) m = std::max(m, (*this)(i, j));
  return m;
}

bool Field::interior_finite() const {
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i < grid_.nx; ++i)
      if (!std::isfinite((*this)(i, j))) return false;
  return true;
}

void fill_ghosts(Field& f, const BoundaryCondition& bc, double ambient) {
  const Grid& g = f.grid();
  const int G = g.ghost;

  for (int j = 0; j < g.ny; ++j) {
    for (int k = 0; k < G; ++k) {
      // ghost -1-k mirrors interior k; ghost nx+k mirrors nx-1-k
      f(-1 - k, j) = bc[Side::XLow] == BoundaryKind::DirichletAmbient ? ambient : f(k, j);
      f(g.nx + k, j) =
          bc[Side::XHigh] == BoundaryKind::DirichletAmbient ? ambient : f(g.nx - 1 - k, j);
    }
  }
  if (g.dim < 2) return;

  for (int i = -G; i < g.nx + G; ++i) {
    for (int k = 0; k < G; ++k) {
      f(i, -1 - k) = bc[Side::YLow] == BoundaryKind::DirichletAmbient ? ambient : f(i, k);
      f(i, g.ny + k) =
          bc[Side::YHigh] == BoundaryKind::DirichletAmbient ? ambient : f(i, g.ny - 1 - k);
    }
  }
}

void update_memory(Field& theta, const Field& T) {
  if (!(theta.grid() == T.grid())) throw std::invalid_argument("update_memory: grid mismatch");
  double* th = theta.data();
  const double* t = T.data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(theta.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < n; ++q) th[q] = std::max(th[q], t[q]);
}

}  // namespace adrfire
