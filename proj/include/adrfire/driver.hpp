#pragma once

// Time loop, sampled diagnostics, output files and run manifests.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "adrfire/config.hpp"
#include "adrfire/front.hpp"
#include "adrfire/integrator.hpp"
#include "adrfire/scenario.hpp"

namespace adrfire {

struct RunOptions {
  std::filesystem::path out_dir;  ///< empty: nothing is written
  std::ostream* log = nullptr;    ///< progress lines, or silence
  bool track_fuel = true;         ///< per-cell check that Y never increases
};

/// Non-blowup bound check at one sample time (reduced preset).
struct BoundSample {
  double t;
  double sup_T;
  double bound;
  double margin;  ///< bound - sup_T
};

struct FrontResult {
  std::string direction;  ///< "+x", "-x", "+y", "-y"
  FrontTrace trace;
  std::optional<SpeedFit> fit;
  double spread_rate = 0.0;  ///< fitted speed along `direction`
};

struct RasterRecord {
  int index;
  double t;
  std::vector<std::pair<std::string, std::pair<double, double>>> files;  ///< name, PGM scale (lo, hi)
};

struct RunManifest {
  json config;
  std::string version = ADRFIRE_VERSION;
  std::string status = "ok";  ///< "ok" or "diverged"
  std::string error;
  long diverged_step = -1;
  int diverged_i = -1;
  int diverged_j = -1;
  long steps = 0;
  double t_final = 0.0;
  double wall_time = 0.0;
  int threads = 1;
  long clamp_count = 0;
  double T_min = 0, T_max = 0, Y_min = 0, Y_max = 0;
  double Y0_max = 0;
  double fuel_mass_initial = 0, fuel_mass_final = 0;
  bool fuel_mass_monotone = true;
  long fuel_increase_cells = 0;
  double min_bound_margin = 0;  ///< reduced runs only
  std::vector<RasterRecord> rasters;

  json to_json(const std::vector<FrontResult>& fronts) const;
};

struct RunResult {
  RunManifest manifest;
  FieldState final_state;
  std::vector<FrontResult> fronts;
  std::vector<BoundSample> bound;

  bool ok() const { return manifest.status == "ok"; }
};

/// Advances the scenario from t = 0 to t_end. Divergence is reported in the
/// manifest (status "diverged"), not thrown. With an output directory the
/// manifest, front trace and rasters are written there.
RunResult run(const Scenario& s, const json& cfg, const RunOptions& opt = {});

/// As run, for the reduced preset; also records the non-blowup bound at
/// every sample time. Throws std::invalid_argument if the parameters are not
/// the reduced preset.
RunResult run_reduced_weber(const Scenario& s, const json& cfg, const RunOptions& opt = {});

/// Non-blowup bound e^{-ht} |T0| + |Y0| / h, or |T0| + t |Y0| for h = 0.
double weber_bound(double t, double h, double T0_sup, double Y0_sup);

struct SweepRow {
  json value;
  std::string status;
  double speed;  ///< NaN without a fitted front
  double residual;
  long steps;
};

/// One run per value of cfg.sweep.key; writes sweep.csv when out_dir is set.
std::vector<SweepRow> run_sweep(const json& cfg, const RunOptions& opt = {});

/// Report of find_wave_speeds as JSON (parameters, roots, residuals, scan).
json wave_speed_report(const ShootingProblem& pb, const WaveSpeedReport& rep);

}  // namespace adrfire
