#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "adrfire/config.hpp"
#include "adrfire/io.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using adrfire::json;

namespace {

const fs::path kDir = fs::temp_directory_path() / "adrfire_test_cli";

int cli(const std::string& args) {
  const std::string cmd = std::string(ADRFIRE_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_config(const std::string& name, const std::string& text) {
  fs::create_directories(kDir);
  const fs::path p = kDir / name;
  adrfire::write_text(p, text);
  return p.string();
}

const char* const kSmall = R"({"grid": {"nx": 120}, "t_end": 1})";

}  // namespace

TEST_CASE("validate-config") {
  CHECK(cli("validate-config --config " + write_config("ok.json", kSmall)) == 0);
  CHECK(cli("validate-config --config " + write_config("empty.json", "")) == 0);
  CHECK(cli("validate-config --config " + write_config("unknown.json", R"({"gird": {}})")) == 1);
  CHECK(cli("validate-config --config " + write_config("syntax.json", "{\"t_end\": }")) == 1);
  CHECK(cli("validate-config --config " + (kDir / "missing.json").string()) == 1);
  CHECK(cli("validate-config") == 1);
  CHECK(cli("validate-config --config " + write_config("ok2.json", kSmall) + " --set params.hh=1") == 1);
  CHECK(cli("frobnicate") == 1);
}

TEST_CASE("validate-config agrees with run") {
  const std::string cold = write_config("cold.json", R"({"grid": {"nx": 120}, "t_end": 1, "initial": {"strip_T": 200}})");
  CHECK(cli("validate-config --config " + cold) == 1);
  CHECK(cli("run --quiet --config " + cold + " --out " + (kDir / "cold").string()) == 1);
}

TEST_CASE("run writes outputs and honours overrides") {
  const fs::path out = kDir / "run";
  fs::remove_all(out);
  const std::string cfg = write_config("run.json", kSmall);
  REQUIRE(cli("run --quiet --threads 2 --config " + cfg + " --out " + out.string() + " --set t_end=0.5") == 0);
  for (const char* f : {"manifest.json", "front_trace.csv", "T_0000.csv", "T_0001.pgm"}) CHECK(fs::exists(out / f));
  const json m = json::parse(adrfire::read_text(out / "manifest.json"));
  CHECK(m["config"]["t_end"] == 0.5);
  CHECK(m["threads"] == 2);

  // a manifest is a valid config
  const fs::path again = kDir / "again";
  fs::remove_all(again);
  CHECK(cli("run --quiet --config " + (out / "manifest.json").string() + " --out " + again.string()) == 0);
  CHECK(adrfire::read_text(out / "T_0001.csv") == adrfire::read_text(again / "T_0001.csv"));
}

TEST_CASE("divergence exits with code 2") {
  const std::string cfg = write_config(
      "boom.json",
      R"({"grid": {"nx": 100}, "t_end": 1, "params": {"epsilon": 1, "delta": 1},
          "initial": {"kind": "hot_spot", "center": [5, 0], "radius": 0.5, "peak": 1e308}})");
  const fs::path out = kDir / "boom";
  CHECK(cli("run --quiet --config " + cfg + " --out " + out.string()) == 2);
  CHECK(json::parse(adrfire::read_text(out / "manifest.json"))["status"] == "diverged");
}

TEST_CASE("reduced, wavespeed, sweep and bench subcommands") {
  const fs::path out = kDir / "sub";
  fs::remove_all(out);
  const std::string red = write_config("reduced.json", R"({"scenario": "reduced"})");
  CHECK(cli("reduced --quiet --config " + red + " --out " + (out / "reduced").string()) == 0);
  CHECK(fs::exists(out / "reduced" / "bound.csv"));
  CHECK(cli("reduced --quiet --config " + write_config("notreduced.json", kSmall) + " --out " + (out / "x").string()) == 1);

  const std::string wave = write_config("wave.json", R"({"wave": {"v": 0.2, "c_lo": -6}})");
  CHECK(cli("wavespeed --quiet --config " + wave + " --out " + (out / "wave").string()) == 0);
  const json w = json::parse(adrfire::read_text(out / "wave" / "wavespeed.json"));
  CHECK(w["roots"].size() == 2);

  const std::string sweep = write_config(
      "sweep.json", R"({"grid": {"nx": 120}, "t_end": 1, "sweep": {"key": "params.h", "values": [0.4, 0.5]}})");
  CHECK(cli("sweep --quiet --config " + sweep + " --out " + (out / "sweep").string()) == 0);
  CHECK(fs::exists(out / "sweep" / "sweep.csv"));
  CHECK(cli("sweep --quiet --config " + write_config("nosweep.json", kSmall) + " --out " + (out / "y").string()) == 1);

  CHECK(cli("bench --quiet --sizes 32,48 --reps 1 --steps 2 --out " + (out / "bench").string()) == 0);
  const std::string csv = adrfire::read_text(out / "bench" / "bench.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  fs::remove_all(kDir);
}
