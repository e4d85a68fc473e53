#pragma once

#include <string>
#include <vector>

namespace adrfire {

struct BenchRow {
  std::string scheme;  ///< "upwind1/euler" or "weno5/ssprk3"
  int nx;
  int ny;
  int steps;                     ///< steps per repetition
  std::vector<double> seconds;   ///< one per repetition
  double median_seconds;
  double seconds_per_step;
  double cell_updates_per_second;
};

/// Times `steps` fixed-dt steps of the validation physics on square 2D
/// grids (with a uniform wind so the advection stencil is exercised), for
/// both scheme pairs. Median over `reps` repetitions.
std::vector<BenchRow> run_bench(const std::vector<int>& sizes, int reps, int steps);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace adrfire
