#pragma once

#include <filesystem>
#include <string>

#include "adrfire/grid.hpp"

namespace adrfire {

/// Interior values, one grid row per line, %.17g.
void write_csv_raster(const std::filesystem::path& path, const Field& f);

/// Binary 16-bit PGM (P5, maxval 65535, big-endian samples). Cell value v
/// maps to round(65535 (v - lo) / (hi - lo)) clamped to [0, 65535]. Row 0 of
/// the image is the highest y row.
void write_pgm16(const std::filesystem::path& path, const Field& f, double lo, double hi);

void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// %.17g
std::string format_double(double v);

}  // namespace adrfire
