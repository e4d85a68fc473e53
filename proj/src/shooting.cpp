#include "adrfire/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace adrfire {

namespace {

namespace ode = boost::numeric::odeint;
using State = std::array<double, 3>;

// Roots of k mu^2 - w mu - q = 0, ordered lo <= hi. False if complex.
bool tail_roots(double k, double w, double q, double& lo, double& hi) {
  const double disc = w * w + 4.0 * k * q;
  if (disc < 0) return false;
  const double r = std::sqrt(disc);
  lo = (w - r) / (2.0 * k);
  hi = (w + r) / (2.0 * k);
  return true;
}

enum class Stop { None, Above, Below };

struct Integration {
  Stop stop = Stop::None;
  double s = 0;
  State y{};
};

// Integrates dy/ds = f(y) from s = 0 to s_end, stopping at the first point
// where y[0] reaches `above` or falls to `below`. The crossing is refined by
// bisection on the dense output.
template <class F>
Integration integrate(F f, State y0, double s_end, double atol, double rtol, double above,
                      double below) {
  auto stepper = ode::make_dense_output(atol, rtol, ode::runge_kutta_dopri5<State>());
  auto sys = [&](const State& y, State& dy, double) { dy = f(y); };
  stepper.initialize(y0, 0.0, std::min(1e-3, s_end));
  Integration res;
  while (stepper.current_time() < s_end) {
    const auto [t0, t1] = stepper.do_step(sys);
    const State& y1 = stepper.current_state();
    Stop hit = Stop::None;
    if (y1[0] >= above) hit = Stop::Above;
    else if (y1[0] <= below) hit = Stop::Below;
    if (!std::isfinite(y1[0])) hit = Stop::Above;
    if (hit == Stop::None && t1 < s_end) continue;

    const double target = hit == Stop::Below ? below : above;
    double lo = t0, hi = std::min(t1, s_end);
    State y;
    if (hit == Stop::None) {
      stepper.calc_state(hi, y);
      res.s = hi;
      res.y = y;
      return res;
    }
    for (int it = 0; it < 60 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
      const double mid = 0.5 * (lo + hi);
      stepper.calc_state(mid, y);
      const bool past = hit == Stop::Above ? y[0] >= target : y[0] <= target;
      (past ? hi : lo) = mid;
    }
    stepper.calc_state(hi, y);
    res.stop = hit;
    res.s = hi;
    res.y = y;
    return res;
  }
  res.s = stepper.current_time();
  res.y = stepper.current_state();
  return res;
}

}  // namespace

ShootingProblem ShootingProblem::from(const ModelParameters& p, double v, double Y0) {
  ShootingProblem pb;
  pb.rho = p.rho;
  pb.c = p.c;
  pb.k = p.k;
  pb.h = p.h;
  pb.T_inf = p.T_inf;
  pb.T_bar = p.T_bar;
  pb.S = p.S;
  pb.A_L = p.A_L;
  pb.v = v;
  pb.Y0 = Y0;
  return pb;
}

void ShootingProblem::validate() const {
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  };
  require(rho > 0 && c > 0 && k > 0, "shooting: rho, c, k must be > 0");
  require(h > 0, "shooting: h must be > 0 (burnt-side decay)");
  require(T_bar > T_inf, "shooting: T_bar must exceed T_inf");
  require(S >= 0 && A_L >= 0, "shooting: S and A_L must be >= 0");
  require(Y0 > 0, "shooting: Y0 must be > 0");
  require(c_lo < c_hi, "shooting: c_lo must be < c_hi");
  require(min_speed > 0, "shooting: min_speed must be > 0");
  require(scan_points >= 2, "shooting: scan_points must be >= 2");
  require(decay_factor > 1 && rtol > 0 && escape_factor > 1, "shooting: bad tolerances");
  require(std::isfinite(v), "shooting: v must be finite");
}

std::array<double, 3> tw_ode_rhs(double U, double Up, double V, double c,
                                 const ShootingProblem& pb, bool burning) {
  if (c == 0) throw std::invalid_argument("tw_ode_rhs: c must be nonzero");
  const double psi = burning ? pb.A_L * std::max(U - pb.T_inf, 0.0) : 0.0;
  const double Upp =
      (pb.rho * pb.c * (pb.v - c) * Up + pb.h * (U - pb.T_inf) - pb.rho * pb.S * psi * V) / pb.k;
  return {Up, Upp, psi * V / c};
}

ShotResult shoot_detail(double c_signed, const ShootingProblem& pb_in) {
  if (c_signed == 0) throw std::invalid_argument("shoot: c must be nonzero");
  ShootingProblem pb = pb_in;
  if (c_signed < 0) pb.v = -pb.v;
  const double c = std::abs(c_signed);

  const double ubar = pb.T_bar - pb.T_inf;
  const double w = pb.rho * pb.c * (pb.v - c);
  double mu_lo = 0, mu_hi = 0;
  tail_roots(pb.k, w, pb.h, mu_lo, mu_hi);  // h > 0: real, mu_lo < 0 < mu_hi
  const double log_decay = std::log(pb.decay_factor);
  const double atol = ubar * pb.rtol * 1e-3;

  // Ahead of the front: seed on the decaying mode and run toward the
  // ignition point, which is pinned where U first reaches T_bar.
  const double xi_far = log_decay / -mu_lo;
  const State seed{pb.T_inf + ubar / pb.decay_factor, mu_lo * ubar / pb.decay_factor, pb.Y0};
  auto ahead = [&](const State& y) {
    const auto d = tw_ode_rhs(y[0], y[1], y[2], c, pb, false);
    return State{-d[0], -d[1], -d[2]};
  };
  const Integration ign =
      integrate(ahead, seed, 2.0 * xi_far, atol, pb.rtol, pb.T_bar, -INFINITY);
  if (ign.stop != Stop::Above) throw std::runtime_error("shoot: ahead tail never reached T_bar");

  // Behind the front, s = -xi from the ignition point.
  const double burn_len = pb.A_L > 0 ? c / (pb.A_L * ubar * pb.Y0) : 0.0;
  const double L = log_decay / std::min(mu_hi, -mu_lo) + burn_len;
  const double cap = pb.T_inf + pb.escape_factor * (ubar + pb.S * pb.Y0 / pb.c);
  auto behind = [&](const State& y) {
    const auto d = tw_ode_rhs(y[0], y[1], y[2], c, pb, true);
    return State{-d[0], -d[1], -d[2]};
  };
  const State start{pb.T_bar, ign.y[1], pb.Y0};
  const Integration run = integrate(behind, start, L, atol, pb.rtol, cap, pb.T_inf);

  ShotResult res{};
  res.distance = run.s;
  res.length = L;
  res.ignition_slope = ign.y[1];
  if (run.stop == Stop::Above) {
    res.outcome = ShotOutcome::Overshoot;
    res.mismatch = std::exp(-run.s / L);
  } else if (run.stop == Stop::Below) {
    res.outcome = ShotOutcome::Undershoot;
    res.mismatch = -std::exp(-run.s / L);
  } else {
    // Project on the mode that grows toward the burnt far field.
    res.outcome = ShotOutcome::Tail;
    const double q = pb.h - pb.rho * pb.S * pb.A_L * run.y[2];
    double lo, hi;
    double g = -1.0;  // oscillatory tail: will cross ambient
    if (tail_roots(pb.k, w, q, lo, hi) && hi > lo) {
      const double grow = (run.y[1] - hi * (run.y[0] - pb.T_inf)) / (lo - hi);
      g = std::tanh(grow / ubar);
    }
    res.mismatch = std::exp(-1.0) * g;
  }
  return res;
}

double shoot(double c, const ShootingProblem& pb) { return shoot_detail(c, pb).mismatch; }

WaveSpeedReport find_wave_speeds(const ShootingProblem& pb) {
  pb.validate();
  WaveSpeedReport rep;
  const int n = pb.scan_points;

  // Magnitude ranges scanned on each side of zero.
  std::vector<std::pair<double, double>> sides;  // (|c| from, |c| to) with sign
  std::vector<double> signs;
  if (pb.c_hi > 0) {
    const double a = std::max(pb.min_speed, pb.c_lo);
    if (pb.c_hi > a) {
      sides.emplace_back(a, pb.c_hi);
      signs.push_back(1.0);
    }
  }
  if (pb.c_lo < 0) {
    const double a = std::max(pb.min_speed, -pb.c_hi);
    if (-pb.c_lo > a) {
      sides.emplace_back(a, -pb.c_lo);
      signs.push_back(-1.0);
    }
  }

  std::vector<double> cs;
  for (std::size_t s = 0; s < sides.size(); ++s) {
    const double r = std::pow(sides[s].second / sides[s].first, 1.0 / (n - 1));
    for (int i = 0; i < n; ++i)
      cs.push_back(signs[s] * (i == n - 1 ? sides[s].second : sides[s].first * std::pow(r, i)));
  }
  std::vector<double> ms(cs.size());
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(cs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < total; ++i) ms[i] = shoot(cs[i], pb);

  const double tol = 1e-6 * (pb.c_hi - pb.c_lo);
  for (std::size_t s = 0; s < sides.size(); ++s) {
    for (int i = 0; i + 1 < n; ++i) {
      const std::size_t a = s * n + i, b = a + 1;
      if (ms[a] == 0) {
        rep.roots.push_back(cs[a]);
        continue;
      }
      if (!(ms[a] * ms[b] < 0)) continue;
      double lo = cs[a], hi = cs[b], mlo = ms[a];
      while (std::abs(hi - lo) > tol) {
        const double mid = 0.5 * (lo + hi);
        const double mm = shoot(mid, pb);
        if (mm == 0) {
          lo = hi = mid;
          break;
        }
        if ((mm < 0) == (mlo < 0)) {
          lo = mid;
          mlo = mm;
        } else {
          hi = mid;
        }
      }
      rep.roots.push_back(0.5 * (lo + hi));
    }
    if (ms[s * n + n - 1] == 0) rep.roots.push_back(cs[s * n + n - 1]);
  }
  std::sort(rep.roots.begin(), rep.roots.end());
  for (double r : rep.roots) rep.residuals.push_back(std::abs(shoot(r, pb)));
  rep.scan_c = cs;
  rep.scan_mismatch = ms;
  return rep;
}

std::string to_string(ShotOutcome o) {
  switch (o) {
    case ShotOutcome::Overshoot: return "overshoot";
    case ShotOutcome::Undershoot: return "undershoot";
    case ShotOutcome::Tail: return "tail";
  }
  return "?";
}

}  // namespace adrfire
