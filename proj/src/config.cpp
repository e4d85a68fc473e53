#include "adrfire/config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adrfire {

namespace {

const char* const kAdvectionSections[] = {"velocity", "two_phase", "virtual_wind"};
const char* const kOptionalSections[] = {"velocity", "two_phase", "virtual_wind", "moisture"};

json params_json(const ModelParameters& p) {
  return {{"rho", p.rho},   {"c", p.c},         {"k", p.k},         {"epsilon", p.epsilon},
          {"delta", p.delta}, {"sigma", p.sigma}, {"h", p.h},         {"T_inf", p.T_inf},
          {"S", p.S},       {"A", p.A},         {"T_ac", p.T_ac},   {"T_bar", p.T_bar},
          {"A_L", p.A_L},   {"Psi_const", p.Psi_const}};
}

json side_kinds(const char* kind) {
  return {{"x_lo", kind}, {"x_hi", kind}, {"y_lo", kind}, {"y_hi", kind}};
}

// Every key a config may contain, with its default. Sections listed in
// kOptionalSections only enter a resolved config when asked for.
json schema() {
  const TwoPhaseParameters tp;
  const MoistureParameters mp;
  const ShootingProblem sp;
  json j = {
      {"scenario", "validation"},
      {"grid", {{"dim", 1}, {"nx", 1200}, {"ny", 1}, {"dx", 0.1}, {"dy", 0.1}, {"x0", 0.0}, {"y0", 0.0}}},
      {"boundary", {{"T", side_kinds("dirichlet")}}},
      {"params", params_json(ModelParameters{})},
      {"combustion", "linearized"},
      {"initial",
       {{"kind", "hot_strip"},
        {"center", {0.0, 0.0}},
        {"radius", 1.0},
        {"peak", 1000.0},
        {"strip_lo", 0.0},
        {"strip_hi", 2.0},
        {"strip_T", 1000.0},
        {"fuel", 1.0},
        {"fuel_raster", json::array()},
        {"temperature_noise", 0.0},
        {"fuel_noise", 0.0}}},
      {"scheme",
       {{"spatial", "upwind1"}, {"temporal", "euler"}, {"cfl", 0.4}, {"fuel_update", "coupled"}, {"dt_max", 1.0}}},
      {"t_end", 50.0},
      {"output",
       {{"front", "x"},
        {"sample_interval", 0.5},
        {"raster_interval", 0.0},
        {"rasters", true},
        {"pgm", true},
        {"front_threshold", nullptr},
        {"fit_start", 0.5}}},
      {"seed", 1},
      {"wave",
       {{"v", nullptr},
        {"c_lo", sp.c_lo},
        {"c_hi", sp.c_hi},
        {"min_speed", sp.min_speed},
        {"scan_points", sp.scan_points},
        {"decay_factor", sp.decay_factor},
        {"rtol", sp.rtol},
        {"escape_factor", sp.escape_factor}}},
      {"sweep", {{"key", ""}, {"values", json::array()}}},
      {"velocity", {0.0, 0.0}},
      {"two_phase",
       {{"wind", {0.0, 0.0}},
        {"R_f", tp.R_f},
        {"rho_a", tp.rho_a},
        {"rho_f", tp.rho_f},
        {"cp_a", tp.cp_a},
        {"cp_f", tp.cp_f}}},
      {"virtual_wind",
       {{"wind", {0.0, 0.0}},
        {"beta", 1.0},
        {"gamma", 0.0},
        {"terrain",
         {{"kind", "flat"}, {"slope", {0.0, 0.0}}, {"height", 0.0}, {"center", {0.0, 0.0}}, {"width", 1.0}}}}},
      {"moisture",
       {{"M", mp.M}, {"c_w", mp.c_w}, {"L_w", mp.L_w}, {"T_w", mp.T_w}, {"cp_f0", mp.cp_f0}, {"Y_tol", mp.Y_tol}}},
  };
  return j;
}

bool is_optional_section(const std::string& key) {
  return std::any_of(std::begin(kOptionalSections), std::end(kOptionalSections),
                     [&](const char* s) { return key == s; });
}

void merge(json& dst, const json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) {
    if (it.value().is_object() && dst.contains(it.key()) && dst[it.key()].is_object())
      merge(dst[it.key()], it.value());
    else
      dst[it.key()] = it.value();
  }
}

void check_keys(const json& user, const json& ref, const std::string& path) {
  if (!user.is_object()) throw ConfigError(path.empty() ? "config must be a JSON object" : path + ": expected an object", path);
  for (auto it = user.begin(); it != user.end(); ++it) {
    const std::string p = path.empty() ? it.key() : path + "." + it.key();
    if (!ref.contains(it.key())) throw ConfigError("unknown key '" + p + "'", p);
    if (ref[it.key()].is_object()) check_keys(it.value(), ref[it.key()], p);
  }
}

// Strips the section from presets that do not use it.
json base_preset() {
  json j = schema();
  for (const char* s : kOptionalSections) j.erase(s);
  return j;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Typed access by dotted path, errors naming the path.
class Reader {
 public:
  explicit Reader(const json& root) : root_(root) {}

  const json& at(const std::string& path) const {
    const json* j = &root_;
    std::stringstream ss(path);
    std::string part;
    while (std::getline(ss, part, '.')) {
      if (!j->is_object() || !j->contains(part)) throw ConfigError(path + ": missing", path);
      j = &(*j)[part];
    }
    return *j;
  }
  bool has(const std::string& path) const {
    try {
      at(path);
      return true;
    } catch (const ConfigError&) {
      return false;
    }
  }
  double number(const std::string& path) const {
    const json& j = at(path);
    if (!j.is_number()) throw ConfigError(path + ": expected a number", path);
    return j.get<double>();
  }
  int integer(const std::string& path) const {
    const json& j = at(path);
    if (!j.is_number() || j.get<double>() != std::floor(j.get<double>()))
      throw ConfigError(path + ": expected an integer", path);
    return j.get<int>();
  }
  std::uint64_t unsigned_integer(const std::string& path) const {
    const json& j = at(path);
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
      throw ConfigError(path + ": expected a nonnegative integer", path);
    return j.get<std::uint64_t>();
  }
  bool boolean(const std::string& path) const {
    const json& j = at(path);
    if (!j.is_boolean()) throw ConfigError(path + ": expected true or false", path);
    return j.get<bool>();
  }
  std::string string(const std::string& path) const {
    const json& j = at(path);
    if (!j.is_string()) throw ConfigError(path + ": expected a string", path);
    return j.get<std::string>();
  }
  Vec2 vec2(const std::string& path) const {
    const json& j = at(path);
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
      throw ConfigError(path + ": expected [x, y]", path);
    return {j[0].get<double>(), j[1].get<double>()};
  }
  std::vector<double> numbers(const std::string& path) const {
    const json& j = at(path);
    if (!j.is_array()) throw ConfigError(path + ": expected an array of numbers", path);
    std::vector<double> out;
    for (const auto& e : j) {
      if (!e.is_number()) throw ConfigError(path + ": expected an array of numbers", path);
      out.push_back(e.get<double>());
    }
    return out;
  }

  template <class E>
  E choice(const std::string& path, std::initializer_list<std::pair<const char*, E>> opts) const {
    const std::string s = string(path);
    std::string names;
    for (const auto& [name, value] : opts) {
      if (s == name) return value;
      names += names.empty() ? name : std::string(", ") + name;
    }
    throw ConfigError(path + ": '" + s + "' is not one of " + names, path);
  }

 private:
  const json& root_;
};

BoundaryKind boundary_kind(const Reader& r, const std::string& path) {
  return r.choice<BoundaryKind>(path, {{"dirichlet", BoundaryKind::DirichletAmbient},
                                       {"neumann", BoundaryKind::NeumannZeroFlux}});
}

}  // namespace

std::vector<std::string> preset_names() { return {"validation", "reduced", "topography", "moisture"}; }

json preset_config(const std::string& name) {
  json j = base_preset();
  j["scenario"] = name;
  if (name == "validation") return j;
  if (name == "reduced") {
    j["grid"] = {{"dim", 1}, {"nx", 512}, {"ny", 1}, {"dx", 0.1}, {"dy", 0.1}, {"x0", 0.0}, {"y0", 0.0}};
    j["boundary"]["T"] = side_kinds("neumann");
    j["params"] = params_json(reduced_weber_parameters(1.0));
    j["combustion"] = "arrhenius";
    j["initial"]["kind"] = "uniform_unit";
    j["t_end"] = 5.0;
    j["output"]["front"] = "none";
    j["output"]["sample_interval"] = 0.05;
    return j;
  }
  if (name == "topography") {
    j["grid"] = {{"dim", 2}, {"nx", 400}, {"ny", 400}, {"dx", 0.2}, {"dy", 0.2}, {"x0", -40.0}, {"y0", -40.0}};
    j["initial"]["kind"] = "hot_spot";
    j["initial"]["center"] = {0.0, 0.0};
    j["initial"]["radius"] = 1.5;
    j["t_end"] = 12.0;
    j["output"]["front"] = "axes";
    j["virtual_wind"] = schema()["virtual_wind"];
    j["virtual_wind"]["gamma"] = 1.0;
    j["virtual_wind"]["terrain"]["kind"] = "plane";
    j["virtual_wind"]["terrain"]["slope"] = {0.3, 0.0};
    return j;
  }
  if (name == "moisture") {
    // Water properties scaled by a dry-fuel specific heat of 1800 J/(kg K).
    j["moisture"] = {{"M", 0.1},      {"c_w", 4186.0 / 1800.0}, {"L_w", 2.26e6 / 1800.0},
                     {"T_w", 373.0},  {"cp_f0", 1.0},           {"Y_tol", 1e-9}};
    j["t_end"] = 40.0;
    j["sweep"] = {{"key", "moisture.M"}, {"values", {0.0, 0.1, 0.2, 0.3}}};
    return j;
  }
  throw ConfigError("scenario: unknown built-in scenario '" + name + "'", "scenario");
}

void apply_override(json& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override '" + assignment + "' is not key=value");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  json* node = &cfg;
  std::stringstream ss(key);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) {
    if (part.empty()) throw ConfigError("override key '" + key + "' has an empty component", key);
    parts.push_back(part);
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (!node->is_object()) throw ConfigError("override key '" + key + "' crosses a non-object", key);
    node = &(*node)[parts[i]];
    if (node->is_null()) *node = json::object();
  }
  if (!node->is_object()) throw ConfigError("override key '" + key + "' crosses a non-object", key);
  (*node)[parts.back()] = value;
}

json parse_config(std::string_view text, std::span<const std::string> overrides) {
  json user = json::object();
  const bool blank = std::all_of(text.begin(), text.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (!blank) {
    try {
      user = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      const auto [line, col] = line_column(text, e.byte);
      std::ostringstream msg;
      msg << "config parse error at line " << line << ", column " << col << ": " << e.what();
      throw ConfigError(msg.str(), {}, line, col);
    }
  }
  if (user.is_object() && user.contains("adrfire_manifest")) {
    if (!user.contains("config")) throw ConfigError("manifest has no 'config' section", "config");
    user = user["config"];
  }
  if (!user.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& o : overrides) apply_override(user, o);

  const json ref = schema();
  check_keys(user, ref, "");

  std::string name = "validation";
  if (user.contains("scenario")) {
    if (!user["scenario"].is_string()) throw ConfigError("scenario: expected a string", "scenario");
    name = user["scenario"].get<std::string>();
  }
  json cfg = preset_config(name);
  for (auto it = user.begin(); it != user.end(); ++it) {
    if (is_optional_section(it.key()) && !cfg.contains(it.key())) cfg[it.key()] = ref[it.key()];
  }
  merge(cfg, user);
  return cfg;
}

Scenario build_scenario(const json& cfg) {
  const Reader r(cfg);
  check_keys(cfg, schema(), "");
  Scenario s;
  s.name = r.string("scenario");

  const int dim = r.integer("grid.dim");
  if (dim == 1) {
    s.grid = Grid::line(r.integer("grid.nx"), r.number("grid.dx"), r.number("grid.x0"));
  } else if (dim == 2) {
    s.grid = Grid::plane(r.integer("grid.nx"), r.integer("grid.ny"), r.number("grid.dx"), r.number("grid.dy"),
                         r.number("grid.x0"), r.number("grid.y0"));
  } else {
    throw ConfigError("grid.dim: must be 1 or 2", "grid.dim");
  }

  s.bc_T.side = {boundary_kind(r, "boundary.T.x_lo"), boundary_kind(r, "boundary.T.x_hi"),
                 boundary_kind(r, "boundary.T.y_lo"), boundary_kind(r, "boundary.T.y_hi")};

  ModelParameters& p = s.params;
  p.rho = r.number("params.rho");
  p.c = r.number("params.c");
  p.k = r.number("params.k");
  p.epsilon = r.number("params.epsilon");
  p.delta = r.number("params.delta");
  p.sigma = r.number("params.sigma");
  p.h = r.number("params.h");
  p.T_inf = r.number("params.T_inf");
  p.S = r.number("params.S");
  p.A = r.number("params.A");
  p.T_ac = r.number("params.T_ac");
  p.T_bar = r.number("params.T_bar");
  p.A_L = r.number("params.A_L");
  p.Psi_const = r.number("params.Psi_const");

  s.combustion = r.choice<CombustionVariant>("combustion", {{"arrhenius", CombustionVariant::ArrheniusHeaviside},
                                                            {"linearized", CombustionVariant::LinearizedMemory},
                                                            {"constant", CombustionVariant::ConstantFactor}});

  int sources = 0;
  for (const char* sec : kAdvectionSections) sources += cfg.contains(sec) ? 1 : 0;
  if (sources > 1)
    throw ConfigError("advection: velocity, two_phase and virtual_wind are mutually exclusive", "advection");
  AdvectionSpec& a = s.advection;
  if (cfg.contains("velocity")) {
    a.source = AdvectionSource::Direct;
    a.velocity = r.vec2("velocity");
  } else if (cfg.contains("two_phase")) {
    a.source = AdvectionSource::TwoPhase;
    a.wind = r.vec2("two_phase.wind");
    a.two_phase.R_f = r.number("two_phase.R_f");
    a.two_phase.rho_a = r.number("two_phase.rho_a");
    a.two_phase.rho_f = r.number("two_phase.rho_f");
    a.two_phase.cp_a = r.number("two_phase.cp_a");
    a.two_phase.cp_f = r.number("two_phase.cp_f");
  } else if (cfg.contains("virtual_wind")) {
    a.source = AdvectionSource::VirtualWind;
    a.wind = r.vec2("virtual_wind.wind");
    a.beta = r.number("virtual_wind.beta");
    a.gamma = r.number("virtual_wind.gamma");
    a.terrain.kind = r.choice<TerrainKind>("virtual_wind.terrain.kind", {{"flat", TerrainKind::Flat},
                                                                        {"plane", TerrainKind::Plane},
                                                                        {"hill", TerrainKind::Hill}});
    a.terrain.slope = r.vec2("virtual_wind.terrain.slope");
    a.terrain.height = r.number("virtual_wind.terrain.height");
    a.terrain.center = r.vec2("virtual_wind.terrain.center");
    a.terrain.width = r.number("virtual_wind.terrain.width");
    if (!(a.terrain.width > 0)) throw ConfigError("virtual_wind.terrain.width: must be > 0", "virtual_wind.terrain.width");
  }

  if (cfg.contains("moisture")) {
    MoistureParameters m;
    m.M = r.number("moisture.M");
    m.c_w = r.number("moisture.c_w");
    m.L_w = r.number("moisture.L_w");
    m.T_w = r.number("moisture.T_w");
    m.cp_f0 = r.number("moisture.cp_f0");
    m.Y_tol = r.number("moisture.Y_tol");
    s.moisture = m;
  }

  InitialConditionSpec& ic = s.initial;
  ic.kind = r.choice<InitialKind>("initial.kind", {{"hot_spot", InitialKind::HotSpotGaussian},
                                                   {"hot_strip", InitialKind::HotStrip},
                                                   {"uniform_unit", InitialKind::UniformUnit}});
  ic.center = r.vec2("initial.center");
  ic.radius = r.number("initial.radius");
  ic.peak = r.number("initial.peak");
  ic.strip_lo = r.number("initial.strip_lo");
  ic.strip_hi = r.number("initial.strip_hi");
  ic.strip_T = r.number("initial.strip_T");
  ic.fuel = r.number("initial.fuel");
  ic.fuel_raster = r.numbers("initial.fuel_raster");
  ic.temperature_noise = r.number("initial.temperature_noise");
  ic.fuel_noise = r.number("initial.fuel_noise");

  SchemeConfig& sc = s.scheme;
  sc.spatial = r.choice<SpatialScheme>("scheme.spatial", {{"upwind1", SpatialScheme::Upwind1},
                                                          {"weno5", SpatialScheme::WENO5}});
  sc.temporal = r.choice<TemporalScheme>("scheme.temporal", {{"euler", TemporalScheme::Euler},
                                                             {"ssprk3", TemporalScheme::SSPRK3}});
  sc.fuel_update = r.choice<FuelUpdate>("scheme.fuel_update", {{"coupled", FuelUpdate::CoupledExplicit},
                                                               {"exact", FuelUpdate::ExactExponential}});
  sc.cfl = r.number("scheme.cfl");
  sc.dt_max = r.number("scheme.dt_max");

  s.t_end = r.number("t_end");
  OutputPlan& o = s.output;
  o.front = r.choice<FrontMode>("output.front", {{"none", FrontMode::None}, {"x", FrontMode::AlongX}, {"axes", FrontMode::Axes}});
  o.front_interval = r.number("output.sample_interval");
  o.raster_interval = r.number("output.raster_interval");
  o.rasters = r.boolean("output.rasters");
  o.pgm = r.boolean("output.pgm");
  if (!r.at("output.front_threshold").is_null()) o.front_threshold = r.number("output.front_threshold");
  o.fit_start = r.number("output.fit_start");
  s.seed = r.unsigned_integer("seed");
  s.reduced = s.name == "reduced";

  try {
    resolve(s);
  } catch (const ScenarioError& e) {
    throw ConfigError(e.what(), e.path());
  }
  return s;
}

ShootingProblem build_shooting_problem(const json& cfg) {
  const Scenario s = build_scenario(cfg);
  const Reader r(cfg);
  double v = 0.0;
  if (!r.at("wave.v").is_null()) {
    v = r.number("wave.v");
  } else if (s.has_advection) {
    v = s.velocity.x(0, 0);
  }
  ShootingProblem pb = ShootingProblem::from(s.params, v, s.initial.fuel);
  pb.c_lo = r.number("wave.c_lo");
  pb.c_hi = r.number("wave.c_hi");
  pb.min_speed = r.number("wave.min_speed");
  pb.scan_points = r.integer("wave.scan_points");
  pb.decay_factor = r.number("wave.decay_factor");
  pb.rtol = r.number("wave.rtol");
  pb.escape_factor = r.number("wave.escape_factor");
  try {
    pb.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what(), "wave");
  }
  return pb;
}

}  // namespace adrfire
