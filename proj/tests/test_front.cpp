#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "adrfire/front.hpp"
#include "doctest.h"

using namespace adrfire;
using doctest::Approx;

TEST_CASE("locate_front examples") {
  const std::vector<double> x = {0.0, 1.0};
  CHECK(*locate_front(std::vector<double>{800, 200}, x, 500, FrontDirection::Forward) == 0.5);
  CHECK(*locate_front(std::vector<double>{200, 800}, x, 500, FrontDirection::Backward) == 0.5);
  CHECK(*locate_front(std::vector<double>{600, 300}, x, 500, FrontDirection::Forward) ==
        Approx(1.0 / 3.0));

  const std::vector<double> ambient(10, 300.0), hot(10, 900.0);
  CHECK_FALSE(locate_front_uniform(ambient, 0.0, 0.1, 500, FrontDirection::Forward));
  CHECK_FALSE(locate_front_uniform(hot, 0.0, 0.1, 500, FrontDirection::Forward));
  CHECK_FALSE(locate_front_uniform(hot, 0.0, 0.1, 500, FrontDirection::Backward));

  // two hot regions: the outermost crossing in each direction
  const std::vector<double> twin = {800, 200, 200, 800, 200};
  const std::vector<double> xs = {0, 1, 2, 3, 4};
  CHECK(*locate_front(twin, xs, 500, FrontDirection::Forward) == 3.5);
  CHECK(*locate_front(twin, xs, 500, FrontDirection::Backward) == 2.5);

  CHECK_THROWS(locate_front(std::vector<double>{1, 2}, std::vector<double>{1, 0}, 1.5,
                            FrontDirection::Forward));
}

TEST_CASE("locate_front on a Gaussian matches the analytic crossing within dx^2") {
  const double T_inf = 300, a = 1000, thr = 800, x0 = 2.0;
  const double exact_fwd = x0 + std::sqrt(std::log(a / (thr - T_inf)));
  const double exact_bwd = x0 - std::sqrt(std::log(a / (thr - T_inf)));
  for (double dx : {0.1, 0.05, 0.02}) {
    const int n = static_cast<int>(std::round(5.0 / dx));
    std::vector<double> T(n);
    for (int i = 0; i < n; ++i) {
      const double x = (i + 0.5) * dx;
      T[i] = T_inf + a * std::exp(-(x - x0) * (x - x0));
    }
    CHECK(std::abs(*locate_front_uniform(T, 0.0, dx, thr, FrontDirection::Forward) - exact_fwd) <= dx * dx);
    CHECK(std::abs(*locate_front_uniform(T, 0.0, dx, thr, FrontDirection::Backward) - exact_bwd) <= dx * dx);
  }
}

TEST_CASE("locate_front is translation equivariant") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    std::vector<double> T(30);
    for (int i = 0; i < 30; ++i) T[i] = i < 15 ? 600 + 400 * U(rng) : 300 + 100 * U(rng);
    const double shift = 20 * U(rng) - 10;
    const auto a = locate_front_uniform(T, 0.0, 0.2, 500, FrontDirection::Forward);
    const auto b = locate_front_uniform(T, shift, 0.2, 500, FrontDirection::Forward);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*b - *a == Approx(shift).epsilon(1e-12));
  }
}

TEST_CASE("locate_front along rows and columns of a 2D field") {
  const Grid g = Grid::plane(10, 8, 0.5, 0.25, -1.0, 2.0);
  Field T(g, 300.0);
  for (int j = 0; j < 5; ++j)
    for (int i = 0; i < 4; ++i) T(i, j) = 900.0;
  // crossing halfway between the cell centres of i = 3 and i = 4
  CHECK(*locate_front_x(T, 2, 600, FrontDirection::Forward) == Approx(g.x(3) + 0.25));
  CHECK(*locate_front_y(T, 1, 600, FrontDirection::Forward) == Approx(g.y(4) + 0.125));
  CHECK_FALSE(locate_front_x(T, 7, 600, FrontDirection::Forward));
}

TEST_CASE("FrontTrace") {
  FrontTrace tr;
  tr.add(0.0, 1.0);
  tr.add(0.5, 2.0);
  tr.add(1.0, 4.0);
  CHECK_THROWS(tr.add(1.0, 5.0));
  CHECK_THROWS(tr.add(0.9, 5.0));
  CHECK(tr.size() == 3);
  CHECK(std::isnan(tr.speed_to_date(0)));
  CHECK(tr.speed_to_date(1) == 2.0);
  CHECK(tr.speed_to_date(2) == 3.0);
}

TEST_CASE("estimate_speed") {
  FrontTrace lin, flat;
  for (int n = 0; n < 11; ++n) {
    lin.add(0.5 * n, 2.0 * (0.5 * n) - 1.0);
    flat.add(0.5 * n, 3.0);
  }
  SpeedFit f = estimate_speed(lin, 0.0, 5.0);
  CHECK(f.speed == Approx(2.0).epsilon(1e-14));
  CHECK(f.intercept == Approx(-1.0).epsilon(1e-13));
  CHECK(f.residual < 1e-13);
  CHECK(f.samples == 11);
  CHECK(estimate_speed(flat, 0.0, 5.0).speed == 0.0);

  // window selects samples
  CHECK(estimate_speed(lin, 2.0, 4.0).samples == 5);
  CHECK_THROWS_AS(estimate_speed(lin, 2.0, 3.9), std::invalid_argument);
  CHECK_THROWS_AS(estimate_speed(FrontTrace{}, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("estimate_speed under noise stays within three standard errors") {
  const double sigma = 0.05, truth = 1.7;
  std::mt19937_64 rng(21);
  std::normal_distribution<double> noise(0.0, sigma);
  for (int trial = 0; trial < 20; ++trial) {
    FrontTrace tr;
    double sxx = 0, mean = 5.0;
    for (int n = 0; n <= 100; ++n) {
      const double t = 0.1 * n;
      tr.add(t, truth * t + noise(rng));
      sxx += (t - mean) * (t - mean);
    }
    const SpeedFit f = estimate_speed(tr, 0.0, 10.0);
    CHECK(std::abs(f.speed - truth) <= 3 * sigma / std::sqrt(sxx));
    CHECK(f.residual == Approx(sigma).epsilon(0.3));
  }
}

TEST_CASE("estimate_speed invariances") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  FrontTrace base, shifted, scaled;
  for (int n = 0; n < 30; ++n) {
    const double t = 0.3 * n, x = 1.2 * t + 0.1 * U(rng);
    base.add(t, x);
    shifted.add(t, x + 40.0);
    scaled.add(2.5 * t, x);
  }
  const SpeedFit a = estimate_speed(base, 0.0, 9.0);
  CHECK(estimate_speed(shifted, 0.0, 9.0).speed == Approx(a.speed).epsilon(1e-12));
  CHECK(estimate_speed(shifted, 0.0, 9.0).residual == Approx(a.residual).epsilon(1e-9));
  CHECK(estimate_speed(scaled, 0.0, 22.5).speed == Approx(a.speed / 2.5).epsilon(1e-12));
}
