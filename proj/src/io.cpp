#include "adrfire/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace adrfire {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void write_csv_raster(const std::filesystem::path& path, const Field& f) {
  const Grid& g = f.grid();
  std::string text;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i) text += ',';
      text += format_double(f(i, j));
    }
    text += '\n';
  }
  write_text(path, text);
}

void write_pgm16(const std::filesystem::path& path, const Field& f, double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("write_pgm16: hi must exceed lo");
  const Grid& g = f.grid();
  std::ostringstream head;
  head << "P5\n" << g.nx << ' ' << g.ny << "\n65535\n";
  std::vector<unsigned char> px;
  px.reserve(static_cast<std::size_t>(g.nx) * g.ny * 2);
  for (int j = g.ny - 1; j >= 0; --j) {
    for (int i = 0; i < g.nx; ++i) {
      double s = std::round(65535.0 * (f(i, j) - lo) / (hi - lo));
      if (!(s >= 0)) s = 0;
      if (s > 65535) s = 65535;
      const auto q = static_cast<unsigned>(s);
      px.push_back(static_cast<unsigned char>(q >> 8));
      px.push_back(static_cast<unsigned char>(q & 0xff));
    }
  }
  auto out = open_out(path, std::ios::binary);
  const std::string h = head.str();
  out.write(h.data(), static_cast<std::streamsize>(h.size()));
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace adrfire
