#include "adrfire/driver.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "adrfire/io.hpp"

namespace adrfire {

namespace {

struct Extrema {
  double T_min, T_max, Y_min, Y_max;
  bool finite;
};

Extrema extrema(const FieldState& s) {
  const Grid& g = s.grid();
  const std::ptrdiff_t nx = g.nx;
  const std::ptrdiff_t n = nx * g.ny;
  double tmin = INFINITY, tmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  bool bad = false;
#pragma omp parallel for schedule(static) reduction(min : tmin, ymin) reduction(max : tmax, ymax) reduction(|| : bad)
  for (std::ptrdiff_t q = 0; q < n; ++q) {
    const std::size_t c = g.index(static_cast<int>(q % nx), static_cast<int>(q / nx));
    const double T = s.T.data()[c], Y = s.Y.data()[c];
    bad = bad || !std::isfinite(T) || !std::isfinite(Y);
    tmin = std::min(tmin, T);
    tmax = std::max(tmax, T);
    ymin = std::min(ymin, Y);
    ymax = std::max(ymax, Y);
  }
  return {tmin, tmax, ymin, ymax, !bad};
}

// Serial in row-major order, so the value does not depend on threads.
double fuel_mass(const Field& Y) {
  const Grid& g = Y.grid();
  double sum = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) sum += Y(i, j);
  return sum * g.dx * (g.dim == 2 ? g.dy : 1.0);
}

long count_increases(const Field& before, const Field& after) {
  const Grid& g = after.grid();
  long n = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) n += after(i, j) > before(i, j) ? 1 : 0;
  return n;
}

int cell_of(double x, double x0, double dx, int n) {
  const int i = static_cast<int>(std::floor((x - x0) / dx));
  return std::clamp(i, 0, n - 1);
}

struct FrontProbe {
  std::string label;
  bool along_x;
  int line;
  FrontDirection dir;
};

std::vector<FrontProbe> front_probes(const Scenario& s) {
  const Grid& g = s.grid;
  switch (s.output.front) {
    case FrontMode::None: return {};
    case FrontMode::AlongX: return {{"+x", true, g.ny / 2, FrontDirection::Forward}};
    case FrontMode::Axes: {
      const int ic = cell_of(s.initial.center[0], g.x0, g.dx, g.nx);
      const int jc = cell_of(s.initial.center[1], g.y0, g.dy, g.ny);
      return {{"+x", true, jc, FrontDirection::Forward},
              {"-x", true, jc, FrontDirection::Backward},
              {"+y", false, ic, FrontDirection::Forward},
              {"-y", false, ic, FrontDirection::Backward}};
    }
  }
  return {};
}

void sample_fronts(const Scenario& s, const FieldState& st, double t, const std::vector<FrontProbe>& probes,
                   std::vector<FrontResult>& fronts) {
  const double thr = s.front_threshold();
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const FrontProbe& p = probes[k];
    const auto pos = p.along_x ? locate_front_x(st.T, p.line, thr, p.dir) : locate_front_y(st.T, p.line, thr, p.dir);
    if (pos) fronts[k].trace.add(t, *pos);
  }
}

std::pair<double, double> pgm_scale(const Field& f) {
  double lo = f.interior_min(), hi = f.interior_max();
  if (!(hi > lo)) hi = lo + 1.0;
  return {lo, hi};
}

RasterRecord write_rasters(const Scenario& s, const FieldState& st, int index, double t,
                           const std::filesystem::path& dir) {
  RasterRecord rec{index, t, {}};
  char tag[16];
  std::snprintf(tag, sizeof tag, "%04d", index);
  const std::pair<const char*, const Field*> fields[] = {{"T", &st.T}, {"Y", &st.Y}};
  for (const auto& [name, f] : fields) {
    const std::string base = std::string(name) + "_" + tag;
    write_csv_raster(dir / (base + ".csv"), *f);
    rec.files.push_back({base + ".csv", {0.0, 0.0}});
    if (s.output.pgm) {
      const auto sc = pgm_scale(*f);
      write_pgm16(dir / (base + ".pgm"), *f, sc.first, sc.second);
      rec.files.push_back({base + ".pgm", sc});
    }
  }
  return rec;
}

void write_front_csv(const std::filesystem::path& path, const std::vector<FrontResult>& fronts) {
  std::string text = "time,direction,position,speed_to_date\n";
  for (const auto& f : fronts) {
    for (std::size_t n = 0; n < f.trace.size(); ++n) {
      text += format_double(f.trace.times()[n]) + "," + f.direction + "," + format_double(f.trace.positions()[n]) +
              "," + (n == 0 ? std::string("") : format_double(f.trace.speed_to_date(n))) + "\n";
    }
  }
  write_text(path, text);
}

void write_bound_csv(const std::filesystem::path& path, const std::vector<BoundSample>& b) {
  std::string text = "time,sup_T,bound,margin\n";
  for (const auto& s : b)
    text += format_double(s.t) + "," + format_double(s.sup_T) + "," + format_double(s.bound) + "," +
            format_double(s.margin) + "\n";
  write_text(path, text);
}

bool is_reduced_preset(const ModelParameters& p) {
  const ModelParameters r = reduced_weber_parameters(p.h);
  // A may be lowered (A = 0 is the pure-decay check); the bound needs Psi <= 1
  return p.rho == r.rho && p.c == r.c && p.k == r.k && p.A >= 0 && p.A <= r.A && p.S == r.S && p.T_ac == r.T_ac &&
         p.epsilon == r.epsilon && p.T_bar == r.T_bar && p.T_inf == r.T_inf;
}

RunResult run_impl(const Scenario& s, const json& cfg, const RunOptions& opt, bool bound_oracle) {
  const auto wall0 = std::chrono::steady_clock::now();
  const bool write = !opt.out_dir.empty();
  if (write) std::filesystem::create_directories(opt.out_dir);

  RunResult res{RunManifest{}, initial_state(s), {}, {}};
  RunManifest& m = res.manifest;
  m.config = cfg;
  m.threads = omp_get_max_threads();
  FieldState& st = res.final_state;
  const System sys = make_system(s);
  StepWorkspace ws(s.grid, sys.uses_memory());

  const auto probes = front_probes(s);
  for (const auto& p : probes) res.fronts.push_back({p.label, {}, std::nullopt, 0.0});

  Extrema ex = extrema(st);
  m.T_min = ex.T_min;
  m.T_max = ex.T_max;
  m.Y_min = ex.Y_min;
  m.Y_max = m.Y0_max = ex.Y_max;
  m.fuel_mass_initial = m.fuel_mass_final = fuel_mass(st.Y);
  const double T0_sup = std::max(std::abs(ex.T_min), std::abs(ex.T_max));
  const double Y0_sup = std::max(std::abs(ex.Y_min), std::abs(ex.Y_max));
  m.min_bound_margin = INFINITY;

  auto sample = [&](double t) {
    sample_fronts(s, st, t, probes, res.fronts);
    if (bound_oracle) {
      const Extrema e = extrema(st);
      const double sup = std::max(std::abs(e.T_min), std::abs(e.T_max));
      const double b = weber_bound(t, s.params.h, T0_sup, Y0_sup);
      res.bound.push_back({t, sup, b, b - sup});
      m.min_bound_margin = std::min(m.min_bound_margin, b - sup);
    }
  };
  int raster_index = 0;
  auto rasters = [&](double t) {
    if (write && s.output.rasters) m.rasters.push_back(write_rasters(s, st, raster_index, t, opt.out_dir));
    ++raster_index;
  };

  sample(0.0);
  rasters(0.0);

  const double si = s.output.front_interval;
  const double ri = s.output.raster_interval;
  long k_sample = 1, k_raster = 1;
  double t = 0.0;
  Field prevY = st.Y;
  while (t < s.t_end) {
    const double t_sample = std::min(k_sample * si, s.t_end);
    const double t_raster = ri > 0 ? std::min(k_raster * ri, s.t_end) : s.t_end;
    const double target = std::min(t_sample, t_raster);
    double dt = stable_dt(st, sys).dt;
    const bool hit = t + dt >= target;
    if (hit) dt = target - t;
    if (opt.track_fuel) prevY = st.Y;
    try {
      m.clamp_count += step(st, dt, sys, ws);
    } catch (const NonFiniteError& e) {
      m.status = "diverged";
      m.error = e.what();
      m.diverged_step = m.steps;
      m.diverged_i = e.i();
      m.diverged_j = e.j();
      break;
    }
    t = hit ? target : t + dt;
    ++m.steps;

    ex = extrema(st);
    if (!ex.finite) {
      m.status = "diverged";
      m.error = "non-finite field value after step";
      m.diverged_step = m.steps;
      break;
    }
    m.T_min = std::min(m.T_min, ex.T_min);
    m.T_max = std::max(m.T_max, ex.T_max);
    m.Y_min = std::min(m.Y_min, ex.Y_min);
    m.Y_max = std::max(m.Y_max, ex.Y_max);
    const double mass = fuel_mass(st.Y);
    if (mass > m.fuel_mass_final) m.fuel_mass_monotone = false;
    m.fuel_mass_final = mass;
    if (opt.track_fuel) m.fuel_increase_cells += count_increases(prevY, st.Y);

    if (hit && target == t_sample) {
      sample(t);
      ++k_sample;
    }
    if (hit && target == t_raster && t < s.t_end) {
      rasters(t);
      ++k_raster;
    }
    if (opt.log && hit && target == t_sample) {
      char line[160];
      std::snprintf(line, sizeof line, "t=%.4g steps=%ld Tmax=%.6g\n", t, m.steps, ex.T_max);
      *opt.log << line << std::flush;
    }
  }
  m.t_final = t;
  if (s.t_end > 0 || m.rasters.empty()) rasters(t);

  const double fit_lo = s.output.fit_start * s.t_end;
  for (auto& f : res.fronts) {
    int in_window = 0;
    for (double tt : f.trace.times()) in_window += tt >= fit_lo ? 1 : 0;
    if (in_window >= 5) {
      f.fit = estimate_speed(f.trace, fit_lo, s.t_end);
      f.spread_rate = f.direction[0] == '-' ? -f.fit->speed : f.fit->speed;
    }
  }
  if (!bound_oracle) m.min_bound_margin = 0;
  m.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();

  if (write) {
    if (!probes.empty()) write_front_csv(opt.out_dir / "front_trace.csv", res.fronts);
    if (bound_oracle) write_bound_csv(opt.out_dir / "bound.csv", res.bound);
    write_text(opt.out_dir / "manifest.json", m.to_json(res.fronts).dump(2) + "\n");
  }
  return res;
}

}  // namespace

double weber_bound(double t, double h, double T0_sup, double Y0_sup) {
  return h > 0 ? std::exp(-h * t) * T0_sup + Y0_sup / h : T0_sup + t * Y0_sup;
}

json RunManifest::to_json(const std::vector<FrontResult>& fronts) const {
  json fr = json::array();
  for (const auto& f : fronts) {
    json e = {{"direction", f.direction}, {"samples", f.trace.size()}};
    if (f.fit) {
      e["speed"] = f.spread_rate;
      e["residual"] = f.fit->residual;
      e["fit_samples"] = f.fit->samples;
    } else {
      e["speed"] = nullptr;
    }
    fr.push_back(e);
  }
  json rs = json::array();
  for (const auto& r : rasters) {
    json files = json::array();
    for (const auto& [name, sc] : r.files) {
      json fe = {{"file", name}};
      if (name.size() > 4 && name.substr(name.size() - 4) == ".pgm") fe["scale"] = {sc.first, sc.second};
      files.push_back(fe);
    }
    rs.push_back({{"index", r.index}, {"time", r.t}, {"files", files}});
  }
  json j = {
      {"adrfire_manifest", 1},
      {"version", version},
      {"config", config},
      {"status", status},
      {"steps", steps},
      {"t_final", t_final},
      {"wall_time_s", wall_time},
      {"threads", threads},
      {"clamp_count", clamp_count},
      {"extrema", {{"T_min", T_min}, {"T_max", T_max}, {"Y_min", Y_min}, {"Y_max", Y_max}}},
      {"fuel",
       {{"Y0_max", Y0_max},
        {"mass_initial", fuel_mass_initial},
        {"mass_final", fuel_mass_final},
        {"mass_monotone", fuel_mass_monotone},
        {"cell_increases", fuel_increase_cells}}},
      {"fronts", fr},
      {"rasters", rs},
  };
  if (config.contains("grid")) j["grid_cells"] = config["grid"]["nx"].get<long>() * config["grid"]["ny"].get<long>();
  if (status != "ok")
    j["error"] = {{"message", error}, {"step", diverged_step}, {"i", diverged_i}, {"j", diverged_j}};
  if (config.value("scenario", "") == "reduced") j["bound_min_margin"] = min_bound_margin;
  return j;
}

RunResult run(const Scenario& s, const json& cfg, const RunOptions& opt) {
  return run_impl(s, cfg, opt, false);
}

RunResult run_reduced_weber(const Scenario& s, const json& cfg, const RunOptions& opt) {
  if (!is_reduced_preset(s.params)) throw std::invalid_argument("run_reduced_weber: parameters are not the reduced preset");
  if (s.has_advection) throw std::invalid_argument("run_reduced_weber: reduced preset has v = 0");
  return run_impl(s, cfg, opt, true);
}

std::vector<SweepRow> run_sweep(const json& cfg, const RunOptions& opt) {
  const std::string key = cfg.at("sweep").at("key").get<std::string>();
  const json& values = cfg.at("sweep").at("values");
  if (key.empty() || !values.is_array() || values.empty())
    throw ConfigError("sweep: needs sweep.key and a nonempty sweep.values", "sweep");
  std::vector<SweepRow> rows;
  for (const auto& v : values) {
    json c = cfg;
    apply_override(c, key + "=" + v.dump());
    const Scenario s = build_scenario(c);
    RunOptions o;
    o.track_fuel = opt.track_fuel;
    const RunResult r = s.reduced ? run_reduced_weber(s, c, o) : run(s, c, o);
    SweepRow row{v, r.manifest.status, std::numeric_limits<double>::quiet_NaN(),
                 std::numeric_limits<double>::quiet_NaN(), r.manifest.steps};
    if (!r.fronts.empty() && r.fronts[0].fit) {
      row.speed = r.fronts[0].spread_rate;
      row.residual = r.fronts[0].fit->residual;
    }
    if (opt.log) *opt.log << key << "=" << v.dump() << " speed=" << format_double(row.speed) << "\n";
    rows.push_back(row);
  }
  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    std::string text = key + ",status,speed,residual,steps\n";
    for (const auto& r : rows)
      text += r.value.dump() + "," + r.status + "," + format_double(r.speed) + "," + format_double(r.residual) + "," +
              std::to_string(r.steps) + "\n";
    write_text(opt.out_dir / "sweep.csv", text);
  }
  return rows;
}

json wave_speed_report(const ShootingProblem& pb, const WaveSpeedReport& rep) {
  json params = {{"rho", pb.rho},   {"c", pb.c},         {"k", pb.k},       {"h", pb.h},
                 {"T_inf", pb.T_inf}, {"T_bar", pb.T_bar}, {"S", pb.S},       {"A_L", pb.A_L},
                 {"v", pb.v},       {"Y0", pb.Y0},       {"c_lo", pb.c_lo}, {"c_hi", pb.c_hi},
                 {"min_speed", pb.min_speed}, {"scan_points", pb.scan_points},
                 {"decay_factor", pb.decay_factor}, {"rtol", pb.rtol}, {"escape_factor", pb.escape_factor}};
  json scan = json::array();
  for (std::size_t i = 0; i < rep.scan_c.size(); ++i) scan.push_back({rep.scan_c[i], rep.scan_mismatch[i]});
  return {{"parameters", params}, {"roots", rep.roots}, {"residuals", rep.residuals}, {"scan", scan}};
}

}  // namespace adrfire
