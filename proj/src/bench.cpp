#include "adrfire/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "adrfire/config.hpp"
#include "adrfire/io.hpp"

namespace adrfire {

namespace {

Scenario bench_scenario(int n, SpatialScheme sp, TemporalScheme tm) {
  json cfg = preset_config("validation");
  cfg["grid"] = {{"dim", 2}, {"nx", n}, {"ny", n}, {"dx", 0.2}, {"dy", 0.2}, {"x0", -0.1 * n}, {"y0", -0.1 * n}};
  cfg["initial"]["kind"] = "hot_spot";
  cfg["initial"]["radius"] = 0.02 * n;
  cfg["velocity"] = {0.5, 0.0};
  cfg["scheme"]["spatial"] = sp == SpatialScheme::WENO5 ? "weno5" : "upwind1";
  cfg["scheme"]["temporal"] = tm == TemporalScheme::SSPRK3 ? "ssprk3" : "euler";
  return build_scenario(cfg);
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int reps, int steps) {
  if (reps < 1 || steps < 1) throw std::invalid_argument("bench: reps and steps must be >= 1");
  const std::pair<SpatialScheme, TemporalScheme> schemes[] = {
      {SpatialScheme::Upwind1, TemporalScheme::Euler}, {SpatialScheme::WENO5, TemporalScheme::SSPRK3}};

  struct Case {
    Scenario s;
    System sys;
    FieldState init;
    double dt;
  };
  std::vector<Case> cases;
  std::vector<BenchRow> rows;
  for (int n : sizes) {
    for (const auto& [sp, tm] : schemes) {
      Scenario s = bench_scenario(n, sp, tm);
      System sys = make_system(s);
      FieldState init = initial_state(s);
      const double dt = stable_dt(init, sys).dt;
      cases.push_back({std::move(s), std::move(sys), std::move(init), dt});
      rows.push_back({to_string(sp) + "/" + to_string(tm), n, n, steps, {}, 0, 0, 0});
    }
  }

  // Repetitions are interleaved across cases so that a slow spell on a
  // shared machine does not land on a single case.
  for (int r = -1; r < reps; ++r) {
    for (std::size_t c = 0; c < cases.size(); ++c) {
      const Case& k = cases[c];
      FieldState st = k.init;
      StepWorkspace ws(k.s.grid, k.sys.uses_memory());
      const auto t0 = std::chrono::steady_clock::now();
      for (int n = 0; n < (r < 0 ? 1 : steps); ++n) step(st, k.dt, k.sys, ws);
      const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (r >= 0) rows[c].seconds.push_back(sec);  // r = -1 is a warm-up pass
    }
  }

  for (auto& row : rows) {
    std::vector<double> sorted = row.seconds;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    row.median_seconds = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    row.seconds_per_step = row.median_seconds / steps;
    row.cell_updates_per_second = static_cast<double>(row.nx) * row.ny / row.seconds_per_step;
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string text = "scheme,nx,ny,steps,reps,median_s,s_per_step,cell_updates_per_s,timings_s\n";
  for (const auto& r : rows) {
    std::string times;
    for (double s : r.seconds) times += (times.empty() ? "" : ";") + format_double(s);
    text += r.scheme + "," + std::to_string(r.nx) + "," + std::to_string(r.ny) + "," + std::to_string(r.steps) + "," +
            std::to_string(r.seconds.size()) + "," + format_double(r.median_seconds) + "," +
            format_double(r.seconds_per_step) + "," + format_double(r.cell_updates_per_second) + "," + times + "\n";
  }
  return text;
}

}  // namespace adrfire
