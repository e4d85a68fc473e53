#pragma once

// JSON configuration: built-in scenario presets, key checking, dotted
// overrides, and conversion to a Scenario.

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "adrfire/scenario.hpp"
#include "adrfire/shooting.hpp"

namespace adrfire {

using json = nlohmann::json;

/// Syntax or semantic problem in a configuration. `line`/`column` are set
/// for syntax errors, `path` for semantic ones.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& msg, std::string path = {}, int line = 0, int column = 0)
      : std::runtime_error(msg), path_(std::move(path)), line_(line), column_(column) {}
  const std::string& path() const { return path_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string path_;
  int line_;
  int column_;
};

/// Names of the built-in scenarios.
std::vector<std::string> preset_names();

/// Full default configuration of a built-in scenario.
json preset_config(const std::string& name);

/// Parses `text` (a config or a run manifest), applies `overrides`
/// ("a.b=value", later ones win) and merges onto the named preset.
/// Unknown keys are rejected. The result has every key spelled out.
json parse_config(std::string_view text, std::span<const std::string> overrides = {});

/// Applies one "dotted.key=value" override to a config tree. The value is
/// read as JSON when it parses, else as a string.
void apply_override(json& cfg, const std::string& assignment);

/// Resolved config -> validated scenario. Errors carry the key path.
Scenario build_scenario(const json& cfg);

/// The shooting problem described by the "params" and "wave" sections.
ShootingProblem build_shooting_problem(const json& cfg);

}  // namespace adrfire
