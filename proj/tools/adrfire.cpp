// adrfire command-line tool.
//
//   adrfire run|reduced|wavespeed|sweep|validate-config --config FILE [--out DIR]
//           [--set key=value]... [--threads N] [--quiet]
//   adrfire bench [--sizes 64,128] [--reps 3] [--steps 20]
//
// Exit codes: 0 success, 1 configuration error, 2 divergence, 3 other failure.

#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "adrfire/bench.hpp"
#include "adrfire/config.hpp"
#include "adrfire/driver.hpp"
#include "adrfire/io.hpp"
#include "adrfire/shooting.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kDiverged = 2;
constexpr int kFailure = 3;

struct Common {
  std::string config;
  std::string out = "out";
  std::vector<std::string> set;
  int threads = 0;
  bool quiet = false;
};

void add_common(CLI::App* sub, Common& c, bool needs_config) {
  auto* opt = sub->add_option("--config", c.config, "scenario config (JSON) or a run manifest");
  if (needs_config) opt->required();
  sub->add_option("--out", c.out, "output directory")->capture_default_str();
  sub->add_option("--set", c.set, "override, dotted.key=value (repeatable, last wins)");
  sub->add_option("--threads", c.threads, "OpenMP threads (0: runtime default)");
  sub->add_flag("--quiet", c.quiet, "no progress output");
}

adrfire::json load(const Common& c) {
  if (!std::filesystem::exists(c.config))
    throw adrfire::ConfigError("config file not found: " + c.config, "--config");
  return adrfire::parse_config(adrfire::read_text(c.config), c.set);
}

int report_run(const adrfire::RunResult& r, const Common& c) {
  const auto& m = r.manifest;
  if (!c.quiet) {
    std::printf("status %s  steps %ld  t %.6g  wall %.3fs\n", m.status.c_str(), m.steps, m.t_final, m.wall_time);
    for (const auto& f : r.fronts) {
      if (f.fit)
        std::printf("front %s  speed %.6g  residual %.3g\n", f.direction.c_str(), f.spread_rate, f.fit->residual);
      else
        std::printf("front %s  no fit (%zu samples)\n", f.direction.c_str(), f.trace.size());
    }
    if (!r.bound.empty()) std::printf("bound min margin %.6g\n", m.min_bound_margin);
    std::printf("outputs in %s\n", c.out.c_str());
  }
  if (!r.ok()) {
    std::fprintf(stderr, "diverged: %s\n", m.error.c_str());
    return kDiverged;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Advection-diffusion-reaction wildfire simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ADRFIRE_VERSION);

  Common c;
  auto* run = app.add_subcommand("run", "run a scenario");
  auto* reduced = app.add_subcommand("reduced", "run the reduced model with the non-blowup bound check");
  auto* wave = app.add_subcommand("wavespeed", "travelling-wave speeds by shooting");
  auto* sweep = app.add_subcommand("sweep", "one run per value of sweep.key");
  auto* check = app.add_subcommand("validate-config", "check a config without running");
  auto* bench = app.add_subcommand("bench", "throughput of the two scheme pairs");
  for (auto* s : {run, reduced, wave, sweep, check}) add_common(s, c, true);

  std::vector<int> sizes{64, 128};
  int reps = 3, steps = 20;
  bench->add_option("--sizes", sizes, "square grid sizes")->delimiter(',')->capture_default_str();
  bench->add_option("--reps", reps, "repetitions")->capture_default_str();
  bench->add_option("--steps", steps, "steps per repetition")->capture_default_str();
  bench->add_option("--out", c.out, "output directory")->capture_default_str();
  bench->add_option("--threads", c.threads, "OpenMP threads");
  bench->add_flag("--quiet", c.quiet, "no table on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }
  if (c.threads > 0) omp_set_num_threads(c.threads);

  try {
    if (bench->parsed()) {
      const auto rows = adrfire::run_bench(sizes, reps, steps);
      const std::string csv = adrfire::bench_csv(rows);
      std::filesystem::create_directories(c.out);
      adrfire::write_text(std::filesystem::path(c.out) / "bench.csv", csv);
      if (!c.quiet) std::cout << csv;
      return kOk;
    }

    const adrfire::json cfg = load(c);
    if (check->parsed()) {
      adrfire::build_scenario(cfg);
      if (!c.quiet) std::printf("ok: %s\n", cfg["scenario"].get<std::string>().c_str());
      return kOk;
    }

    adrfire::RunOptions opt;
    opt.out_dir = c.out;
    if (!c.quiet) opt.log = &std::cerr;

    if (wave->parsed()) {
      const auto pb = adrfire::build_shooting_problem(cfg);
      const auto rep = adrfire::find_wave_speeds(pb);
      std::filesystem::create_directories(c.out);
      adrfire::write_text(std::filesystem::path(c.out) / "wavespeed.json",
                          adrfire::wave_speed_report(pb, rep).dump(2) + "\n");
      if (!c.quiet) {
        std::printf("%zu root(s)\n", rep.roots.size());
        for (double r : rep.roots) std::printf("c = %.8g\n", r);
      }
      return kOk;
    }
    if (sweep->parsed()) {
      const auto rows = adrfire::run_sweep(cfg, opt);
      for (const auto& r : rows)
        if (r.status != "ok") return kDiverged;
      return kOk;
    }

    const adrfire::Scenario s = adrfire::build_scenario(cfg);
    if (reduced->parsed()) return report_run(adrfire::run_reduced_weber(s, cfg, opt), c);
    return report_run(adrfire::run(s, cfg, opt), c);
  } catch (const adrfire::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFailure;
  }
}
