#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace adrfire {

/// Uniform Cartesian grid, cell centred, with a halo of ghost cells.
///
/// Interior cells are indexed i in [0, nx), j in [0, ny). Ghost cells extend
/// the index range by `ghost` on every side of an active axis. A 1D grid has
/// ny == 1 and no ghost rows in y.
struct Grid {
  static constexpr int kGhost = 3;

  int dim = 1;
  int nx = 1;
  int ny = 1;
  double dx = 1.0;
  double dy = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;
  int ghost = kGhost;

  static Grid line(int nx, double dx, double x0 = 0.0);
  static Grid plane(int nx, int ny, double dx, double dy, double x0 = 0.0, double y0 = 0.0);

  void validate() const;

  int gx() const { return ghost; }
  int gy() const { return dim == 2 ? ghost : 0; }
  int stride() const { return nx + 2 * gx(); }
  int rows() const { return ny + 2 * gy(); }
  std::size_t size() const { return static_cast<std::size_t>(stride()) * rows(); }
  std::size_t interior_cells() const { return static_cast<std::size_t>(nx) * ny; }

  std::size_t index(int i, int j = 0) const {
    return static_cast<std::size_t>(j + gy()) * stride() + static_cast<std::size_t>(i + gx());
  }

  double x(int i) const { return x0 + (i + 0.5) * dx; }
  double y(int j) const { return y0 + (j + 0.5) * dy; }
  double length_x() const { return nx * dx; }
  double length_y() const { return ny * dy; }

  bool operator==(const Grid&) const = default;
};

/// Scalar cell values including the ghost halo.
class Field {
 public:
  Field() = default;
  explicit Field(const Grid& g, double value = 0.0) : grid_(g), v_(g.size(), value) {}

  const Grid& grid() const { return grid_; }

  double& operator()(int i, int j = 0) { return v_[grid_.index(i, j)]; }
  double operator()(int i, int j = 0) const { return v_[grid_.index(i, j)]; }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  std::size_t size() const { return v_.size(); }
  std::span<double> values() { return v_; }
  std::span<const double> values() const { return v_; }

  void fill(double value);

  /// Copies of the interior values in row-major (j, i) order.
  std::vector<double> interior() const;

  /// Extremes over interior cells.
  double interior_min() const;
  double interior_max() const;
  bool interior_finite() const;

  bool operator==(const Field&) const = default;

 private:
  Grid grid_;
  std::vector<double> v_;
};

struct VectorField {
  Field x;
  Field y;  ///< zero on 1D grids

  VectorField() = default;
  explicit VectorField(const Grid& g, double vx = 0.0, double vy = 0.0) : x(g, vx), y(g, vy) {}
};

enum class BoundaryKind { DirichletAmbient, NeumannZeroFlux };

enum class Side { XLow = 0, XHigh = 1, YLow = 2, YHigh = 3 };

/// One condition per physical side; y sides are ignored on 1D grids.
struct BoundaryCondition {
  std::array<BoundaryKind, 4> side{BoundaryKind::DirichletAmbient, BoundaryKind::DirichletAmbient,
                                   BoundaryKind::DirichletAmbient, BoundaryKind::DirichletAmbient};

  static BoundaryCondition all(BoundaryKind k) { return {{k, k, k, k}}; }
  BoundaryKind operator[](Side s) const { return side[static_cast<int>(s)]; }
};

/// Dirichlet sides get `ambient` in every ghost layer; Neumann sides mirror
/// the interior (even reflection about the wall face). x ghosts are filled
/// first, then y ghosts over the full padded width, so corners are set.
void fill_ghosts(Field& f, const BoundaryCondition& bc, double ambient);

/// Running maximum used as the Heaviside memory temperature.
void update_memory(Field& theta, const Field& T);

}  // namespace adrfire
