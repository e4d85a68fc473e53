#include <omp.h>

#include <cmath>
#include <functional>
#include <random>

#include "adrfire/operators.hpp"
#include "adrfire/stencils.hpp"
#include "doctest.h"

using namespace adrfire;
using doctest::Approx;

namespace {

// Sets every cell, ghosts included, from an analytic function.
Field sample(const Grid& g, const std::function<double(double, double)>& fn) {
  Field f(g);
  for (int j = -g.gy(); j < g.ny + g.gy(); ++j)
    for (int i = -g.gx(); i < g.nx + g.gx(); ++i) f(i, j) = fn(g.x(i), g.dim == 2 ? g.y(j) : 0.0);
  return f;
}

double max_error(const Field& a, const std::function<double(double)>& exact) {
  const Grid& g = a.grid();
  double e = 0;
  for (int i = 0; i < g.nx; ++i) e = std::max(e, std::abs(a(i) - exact(g.x(i))));
  return e;
}

// Observed orders between successive errors of a halving sequence.
std::vector<double> orders(const std::vector<double>& err) {
  std::vector<double> p;
  for (std::size_t k = 1; k < err.size(); ++k) p.push_back(std::log2(err[k - 1] / err[k]));
  return p;
}

double total_variation(const Field& f) {
  double tv = 0;
  for (int i = 1; i < f.grid().nx; ++i) tv += std::abs(f(i) - f(i - 1));
  return tv;
}

}  // namespace

TEST_CASE("fill_ghosts") {
  const Grid g = Grid::plane(6, 5, 0.5, 0.5);
  SUBCASE("constant field with Neumann sides stays constant") {
    Field f(g, 2.5);
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j) f(i, j) = 2.5;
    fill_ghosts(f, BoundaryCondition::all(BoundaryKind::NeumannZeroFlux), 0.0);
    for (double v : f.values()) CHECK(v == 2.5);
  }
  SUBCASE("ambient field with Dirichlet sides is unchanged") {
    Field f(g, 300.0);
    const Field before = f;
    fill_ghosts(f, BoundaryCondition::all(BoundaryKind::DirichletAmbient), 300.0);
    CHECK(f == before);
  }
  SUBCASE("Neumann mirror zeroes the wall difference of a ramp") {
    const Grid l = Grid::line(8, 0.25);
    Field f(l);
    for (int i = 0; i < l.nx; ++i) f(i) = 3.0 * l.x(i) + 1.0;
    fill_ghosts(f, BoundaryCondition::all(BoundaryKind::NeumannZeroFlux), 0.0);
    CHECK(f(0) - f(-1) == 0.0);
    CHECK(f(l.nx) - f(l.nx - 1) == 0.0);
    for (int k = 0; k < l.ghost; ++k) {
      CHECK(f(-1 - k) == f(k));
      CHECK(f(l.nx + k) == f(l.nx - 1 - k));
    }
  }
  SUBCASE("mixed sides and corners") {
    Field f(g);
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) f(i, j) = 10.0 * i + j;
    BoundaryCondition bc = BoundaryCondition::all(BoundaryKind::NeumannZeroFlux);
    bc.side[static_cast<int>(Side::XHigh)] = BoundaryKind::DirichletAmbient;
    fill_ghosts(f, bc, -7.0);
    CHECK(f(-1, 2) == f(0, 2));
    CHECK(f(g.nx + 2, 2) == -7.0);
    CHECK(f(-2, -1) == f(1, 0));      // corner: x mirror, then y mirror
    CHECK(f(g.nx, -3) == -7.0);       // corner on the Dirichlet side
  }
}

TEST_CASE("gradient_central") {
  const Grid g = Grid::plane(9, 7, 0.25, 0.5, -1.0, 2.0);
  const VectorField c = gradient_central(sample(g, [](double, double) { return 4.2; }));
  const VectorField l = gradient_central(sample(g, [](double x, double y) { return 0.5 * x - 1.5 * y; }));
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      CHECK(c.x(i, j) == 0.0);
      CHECK(c.y(i, j) == 0.0);
      CHECK(l.x(i, j) == Approx(0.5).epsilon(1e-13));
      CHECK(l.y(i, j) == Approx(-1.5).epsilon(1e-13));
    }
  }

  std::vector<double> err;
  for (int n : {32, 64, 128}) {
    const Grid s = Grid::line(n, 2 * M_PI / n);
    err.push_back(max_error(gradient_central(sample(s, [](double x, double) { return std::sin(x); })).x,
                            [](double x) { return std::cos(x); }));
  }
  for (double p : orders(err)) CHECK(p >= 1.9);
}

TEST_CASE("diffusion_variable_K") {
  const Grid g = Grid::line(12, 0.3, -2.0);
  const Field one = sample(g, [](double, double) { return 1.0; });

  const Field lin = diffusion_variable_K(sample(g, [](double x, double) { return 2.0 * x + 5.0; }), one);
  const Field quad = diffusion_variable_K(sample(g, [](double x, double) { return x * x; }), one);
  const Field self = sample(g, [](double x, double) { return x; });
  const Field kt = diffusion_variable_K(self, self);  // K(T) = T, T = x
  for (int i = 0; i < g.nx; ++i) {
    CHECK(std::abs(lin(i)) < 1e-11);
    CHECK(quad(i) == Approx(2.0).epsilon(1e-12));
    CHECK(kt(i) == Approx(1.0).epsilon(1e-12));
  }

  // manufactured: K = 1 + 0.5 sin x, T = sin x
  std::vector<double> err;
  for (int n : {32, 64, 128}) {
    const Grid s = Grid::line(n, 2 * M_PI / n);
    const Field T = sample(s, [](double x, double) { return std::sin(x); });
    const Field K = sample(s, [](double x, double) { return 1.0 + 0.5 * std::sin(x); });
    err.push_back(max_error(diffusion_variable_K(T, K), [](double x) {
      return 0.5 * std::cos(x) * std::cos(x) - (1.0 + 0.5 * std::sin(x)) * std::sin(x);
    }));
  }
  for (double p : orders(err)) CHECK(p >= 1.9);

  // symmetric T and K about the centre give a symmetric result
  const Grid sym = Grid::line(21, 0.1, -1.05);
  const Field Ts = sample(sym, [](double x, double) { return std::exp(-x * x * 4.0); });
  const Field Ks = sample(sym, [](double x, double) { return 1.0 + x * x; });
  const Field d = diffusion_variable_K(Ts, Ks);
  for (int i = 0; i < sym.nx; ++i) CHECK(d(i) == Approx(d(sym.nx - 1 - i)).epsilon(1e-12));
}

TEST_CASE("advect_upwind") {
  const Grid g = Grid::line(10, 0.2);
  const Field x = sample(g, [](double x, double) { return x; });
  const Field c = sample(g, [](double, double) { return 3.0; });
  const Field zero = advect_upwind(x, VectorField(g, 0.0));
  const Field cst = advect_upwind(c, VectorField(g, 2.0));
  const Field pos = advect_upwind(x, VectorField(g, 1.0));
  const Field neg = advect_upwind(x, VectorField(g, -1.0));
  for (int i = 0; i < g.nx; ++i) {
    CHECK(zero(i) == 0.0);
    CHECK(cst(i) == 0.0);
    CHECK(pos(i) == Approx(1.0).epsilon(1e-13));
    CHECK(neg(i) == Approx(-1.0).epsilon(1e-13));
  }
}

TEST_CASE("advect_weno5 exactness") {
  const Grid g = Grid::line(16, 0.125, -1.0);
  const Field c = sample(g, [](double, double) { return -2.0; });
  const Field a = advect_weno5(c, VectorField(g, 1.3));
  for (int i = 0; i < g.nx; ++i) CHECK(std::abs(a(i)) < 1e-13);

  // Every candidate stencil is exact up to cubics, so any weights are.
  for (int deg = 1; deg <= 3; ++deg) {
    const auto fn = [deg](double x, double) { return std::pow(x, deg) - 0.5 * x + 0.25; };
    const auto df = [deg](double x) { return deg * std::pow(x, deg - 1) - 0.5; };
    for (double vel : {1.0, -1.0}) {
      const Field d = advect_weno5(sample(g, fn), VectorField(g, vel));
      for (int i = 0; i < g.nx; ++i) CHECK(d(i) == Approx(vel * df(g.x(i))).epsilon(1e-11).scale(1.0));
    }
  }
  // The ideal-weight combination is the one-sided six-point derivative,
  // exact up to degree five.
  for (int deg = 4; deg <= 5; ++deg) {
    const Field f = sample(g, [deg](double x, double) { return std::pow(x, deg); });
    for (int i = 0; i < g.nx; ++i) {
      const double* p = f.data() + g.index(i);
      const double exact = deg * std::pow(g.x(i), deg - 1);
      CHECK(stencil::weno5_minus(p, 1, 1.0 / g.dx, true) == Approx(exact).epsilon(1e-10).scale(1.0));
      CHECK(stencil::weno5_plus(p, 1, 1.0 / g.dx, true) == Approx(exact).epsilon(1e-10).scale(1.0));
    }
  }

  Grid thin = g;
  thin.ghost = 2;
  CHECK_THROWS(advect_weno5(Field(thin), VectorField(thin, 1.0)));
}

TEST_CASE("advect_weno5 convergence on sin") {
  for (double vel : {1.0, -1.0}) {
    std::vector<double> err;
    for (int n : {32, 64, 128}) {
      const Grid s = Grid::line(n, 2 * M_PI / n);
      const Field d = advect_weno5(sample(s, [](double x, double) { return std::sin(x); }), VectorField(s, vel));
      err.push_back(max_error(d, [vel](double x) { return vel * std::cos(x); }));
    }
    for (double p : orders(err)) CHECK(p >= 4.5);
  }
}

TEST_CASE("advect_weno5 on a step does not grow total variation") {
  const Grid g = Grid::line(100, 0.01);
  Field u(g);
  for (int i = 0; i < g.nx; ++i) u(i) = g.x(i) < 0.5 ? 1.0 : 0.0;
  const BoundaryCondition bc = BoundaryCondition::all(BoundaryKind::NeumannZeroFlux);
  const VectorField v(g, 1.0);
  const double dt = 0.4 * g.dx;
  const double tv0 = total_variation(u);

  // one SSPRK3 step of u_t + u_x = 0
  auto L = [&](Field f) {
    fill_ghosts(f, bc, 0.0);
    return advect_weno5(f, v);
  };
  Field u1 = u, u2 = u, u3 = u;
  const Field r0 = L(u);
  for (int i = 0; i < g.nx; ++i) u1(i) = u(i) - dt * r0(i);
  const Field r1 = L(u1);
  for (int i = 0; i < g.nx; ++i) u2(i) = 0.75 * u(i) + 0.25 * (u1(i) - dt * r1(i));
  const Field r2 = L(u2);
  for (int i = 0; i < g.nx; ++i) u3(i) = u(i) / 3.0 + 2.0 / 3.0 * (u2(i) - dt * r2(i));
  CHECK(total_variation(u3) <= 1.01 * tv0);
}

TEST_CASE("terrain_gradient") {
  const Grid g = Grid::plane(10, 8, 0.5, 0.25, -2.0, -1.0);
  const VectorField flat = terrain_gradient(Field(g, 12.0));
  const VectorField plane = terrain_gradient(sample(g, [](double x, double y) { return 0.3 * x - 0.7 * y + 4.0; }));
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      CHECK(flat.x(i, j) == 0.0);
      CHECK(flat.y(i, j) == 0.0);
      CHECK(plane.x(i, j) == Approx(0.3).epsilon(1e-12));
      CHECK(plane.y(i, j) == Approx(-0.7).epsilon(1e-12));
    }
  }

  // Gaussian hill, interior error shrinks like dx^2
  std::vector<double> err;
  for (int n : {40, 80, 160}) {
    const Grid h = Grid::plane(n, n, 8.0 / n, 8.0 / n, -4.0, -4.0);
    const auto Z = [](double x, double y) { return 2.0 * std::exp(-(x * x + y * y)); };
    const VectorField gz = terrain_gradient(sample(h, Z));
    double e = 0;
    for (int j = 1; j < n - 1; ++j)
      for (int i = 1; i < n - 1; ++i) {
        const double x = h.x(i), y = h.y(j);
        e = std::max(e, std::abs(gz.x(i, j) + 2.0 * x * Z(x, y)));
        e = std::max(e, std::abs(gz.y(i, j) + 2.0 * y * Z(x, y)));
      }
    err.push_back(e);
  }
  for (double p : orders(err)) CHECK(p >= 1.9);
}

TEST_CASE("operators annihilate constants in 2D") {
  const Grid g = Grid::plane(12, 9, 0.1, 0.2);
  const Field c(g, 7.5);
  const Field K(g, 2.0);
  VectorField v(g, 0.7, -1.1);
  const Field d = diffusion_variable_K(c, K);
  const Field u = advect_upwind(c, v);
  const Field w = advect_weno5(c, v);
  const VectorField gr = gradient_central(c);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      CHECK(std::abs(d(i, j)) < 1e-12);
      CHECK(std::abs(u(i, j)) < 1e-12);
      CHECK(std::abs(w(i, j)) < 1e-12);
      CHECK(std::abs(gr.x(i, j)) + std::abs(gr.y(i, j)) < 1e-12);
    }
}

TEST_CASE("OpenMP operators match the serial reference bitwise") {
  const Grid g = Grid::plane(37, 29, 0.13, 0.21, -1.0, 0.5);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Field f(g), K(g);
  VectorField v(g);
  for (std::size_t q = 0; q < f.size(); ++q) {
    f.data()[q] = 300.0 + 50.0 * U(rng);
    K.data()[q] = 1.0 + 0.5 * U(rng);
    v.x.data()[q] = U(rng);
    v.y.data()[q] = U(rng);
  }
  const int saved = omp_get_max_threads();
  for (int threads : {1, 2, 8}) {
    omp_set_num_threads(threads);
    CHECK(diffusion_variable_K(f, K) == reference::diffusion_variable_K(f, K));
    CHECK(advect_upwind(f, v) == reference::advect_upwind(f, v));
    CHECK(advect_weno5(f, v) == reference::advect_weno5(f, v));
    const VectorField a = gradient_central(f), b = reference::gradient_central(f);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    const VectorField ta = terrain_gradient(f), tb = reference::terrain_gradient(f);
    CHECK(ta.x == tb.x);
    CHECK(ta.y == tb.y);
  }
  omp_set_num_threads(saved);
}
