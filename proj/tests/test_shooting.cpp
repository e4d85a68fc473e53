#include <cmath>
#include <stdexcept>

#include "adrfire/shooting.hpp"
#include "doctest.h"

using namespace adrfire;
using doctest::Approx;

namespace {

ShootingProblem signed_bracket(double v) {
  ShootingProblem pb;
  pb.v = v;
  pb.c_lo = -6.0;
  pb.c_hi = 6.0;
  return pb;
}

// Classic RK4 on the burning-side system with s = -xi, as an independent
// integrator.
std::array<double, 3> rk4_behind(std::array<double, 3> y, double c, const ShootingProblem& pb,
                                 double ds, int steps) {
  auto f = [&](const std::array<double, 3>& z) {
    const auto d = tw_ode_rhs(z[0], z[1], z[2], c, pb, true);
    return std::array<double, 3>{-d[0], -d[1], -d[2]};
  };
  for (int n = 0; n < steps; ++n) {
    const auto k1 = f(y);
    std::array<double, 3> t;
    for (int q = 0; q < 3; ++q) t[q] = y[q] + 0.5 * ds * k1[q];
    const auto k2 = f(t);
    for (int q = 0; q < 3; ++q) t[q] = y[q] + 0.5 * ds * k2[q];
    const auto k3 = f(t);
    for (int q = 0; q < 3; ++q) t[q] = y[q] + ds * k3[q];
    const auto k4 = f(t);
    for (int q = 0; q < 3; ++q) y[q] += ds / 6 * (k1[q] + 2 * k2[q] + 2 * k3[q] + k4[q]);
  }
  return y;
}

}  // namespace

TEST_CASE("tw_ode_rhs") {
  ShootingProblem pb;
  pb.h = 0.0;
  pb.v = 0.3;
  // no combustion, no cooling: U'' = rho c (v - c) U' / k
  const auto d = tw_ode_rhs(350.0, 2.0, 1.0, 1.3, pb, false);
  CHECK(d[0] == 2.0);
  CHECK(d[1] == Approx(-1.0 * 2.0).epsilon(1e-15));
  CHECK(d[2] == 0.0);

  // the unburnt far field is an equilibrium, burning or not
  ShootingProblem q;
  for (bool burning : {false, true}) {
    const auto e = tw_ode_rhs(q.T_inf, 0.0, q.Y0, 2.0, q, burning);
    CHECK(e[0] == 0.0);
    CHECK(e[1] == 0.0);
    CHECK(e[2] == 0.0);
  }

  // full right-hand side by hand
  const auto b = tw_ode_rhs(500.0, -3.0, 0.6, 2.0, q, true);
  const double psi = q.A_L * 200.0;
  CHECK(b[1] == Approx((q.rho * q.c * (q.v - 2.0) * -3.0 + q.h * 200.0 - q.rho * q.S * psi * 0.6) / q.k));
  CHECK(b[2] == Approx(psi * 0.6 / 2.0));

  CHECK_THROWS(tw_ode_rhs(350.0, 0.0, 1.0, 0.0, pb, false));
}

TEST_CASE("problem validation") {
  ShootingProblem pb;
  CHECK_NOTHROW(pb.validate());
  pb.c_lo = 7.0;
  CHECK_THROWS(pb.validate());
  pb = ShootingProblem{};
  pb.Y0 = 0.0;
  CHECK_THROWS(pb.validate());
  pb = ShootingProblem{};
  pb.h = 0.0;
  CHECK_THROWS(pb.validate());

  ModelParameters p;
  p.k = 2.0;
  const ShootingProblem from = ShootingProblem::from(p, 0.4, 0.8);
  CHECK(from.k == 2.0);
  CHECK(from.v == 0.4);
  CHECK(from.Y0 == 0.8);
}

TEST_CASE("mismatch brackets the fast wave") {
  const ShootingProblem pb;
  const double lo = shoot(1.5, pb), hi = shoot(2.5, pb);
  CHECK(lo * hi < 0);
  CHECK(shoot(-1.5, pb) * shoot(-2.5, pb) < 0);
  // mismatch is bounded
  for (double c : {0.3, 1.0, 1.9, 4.0}) CHECK(std::abs(shoot(c, pb)) <= 1.0);
}

TEST_CASE("roots do not depend on where the tail is seeded") {
  ShootingProblem a;
  a.c_lo = 1.0;
  a.c_hi = 3.0;
  a.scan_points = 8;
  ShootingProblem b = a;
  b.decay_factor = 1e9;
  const auto ra = find_wave_speeds(a), rb = find_wave_speeds(b);
  REQUIRE(ra.roots.size() == 1);
  REQUIRE(rb.roots.size() == 1);
  CHECK(rb.roots[0] == Approx(ra.roots[0]).epsilon(1e-3));
  for (double c : {1.2, 1.8, 2.1, 2.8}) CHECK((shoot(c, a) > 0) == (shoot(c, b) > 0));
}

TEST_CASE("no combustion means no wave") {
  ShootingProblem pb = signed_bracket(0.2);
  pb.A_L = 0.0;
  pb.scan_points = 12;
  const auto rep = find_wave_speeds(pb);
  CHECK(rep.roots.empty());
  for (double m : rep.scan_mismatch) CHECK((m > 0) == (rep.scan_mismatch[0] > 0));
}

TEST_CASE("fast and slow waves under weak advection, one wave under strong") {
  const auto weak = find_wave_speeds(signed_bracket(0.2));
  REQUIRE(weak.roots.size() == 2);
  CHECK(weak.roots[0] < 0);
  CHECK(weak.roots[1] > 0);
  CHECK(std::abs(weak.roots[1]) > std::abs(weak.roots[0]));  // downwind front is the fast one
  CHECK(weak.roots[1] == Approx(2.17).epsilon(0.01));

  const auto strong = find_wave_speeds(signed_bracket(2.0));
  REQUIRE(strong.roots.size() == 1);
  CHECK(strong.roots[0] == Approx(4.05).epsilon(0.01));

  // without advection the two fronts mirror each other
  const auto still = find_wave_speeds(signed_bracket(0.0));
  REQUIRE(still.roots.size() == 2);
  CHECK(still.roots[0] == Approx(-still.roots[1]).epsilon(1e-6));
}

TEST_CASE("the burnt state behind the wave") {
  const ShootingProblem pb;
  ShootingProblem narrow = pb;
  narrow.c_lo = 1.5;
  narrow.c_hi = 2.5;
  narrow.scan_points = 6;
  const auto rep = find_wave_speeds(narrow);
  REQUIRE(rep.roots.size() == 1);
  const double c = rep.roots[0];
  const ShotResult r = shoot_detail(c, pb);

  // Behind the ignition point the fuel is consumed and the temperature
  // stays between ambient and the cap, up to well past the burn length.
  const double burn_len = c / (pb.A_L * (pb.T_bar - pb.T_inf) * pb.Y0);
  const double span = std::min(0.9 * r.distance, 8.0 * burn_len);
  const int steps = 20000;
  const auto y = rk4_behind({pb.T_bar, r.ignition_slope, pb.Y0}, c, pb, span / steps, steps);
  CHECK(y[2] < 0.05 * pb.Y0);
  CHECK(y[2] >= 0.0);
  CHECK(y[0] > pb.T_inf);
  CHECK(y[0] < pb.T_inf + pb.escape_factor * (pb.T_bar - pb.T_inf + pb.S * pb.Y0 / pb.c));
}
