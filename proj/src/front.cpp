#include "adrfire/front.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace adrfire {

namespace {

// Index of the sample pair (k, k+1) holding the outermost crossing, with
// values[inner] >= threshold > values[outer]. Returns false if there is none.
bool find_crossing(std::span<const double> v, double threshold, FrontDirection dir,
                   std::size_t& inner, std::size_t& outer) {
  const std::size_t n = v.size();
  if (n < 2) return false;
  if (dir == FrontDirection::Forward) {
    for (std::size_t k = n - 1; k > 0; --k) {
      if (v[k - 1] >= threshold && v[k] < threshold) {
        inner = k - 1;
        outer = k;
        return true;
      }
    }
  } else {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (v[k + 1] >= threshold && v[k] < threshold) {
        inner = k + 1;
        outer = k;
        return true;
      }
    }
  }
  return false;
}

double fraction(double a, double b, double threshold) { return (a - threshold) / (a - b); }

}  // namespace

std::optional<double> locate_front(std::span<const double> values, std::span<const double> coords,
                                   double threshold, FrontDirection dir) {
  if (values.size() != coords.size()) throw std::invalid_argument("locate_front: size mismatch");
  for (std::size_t k = 1; k < coords.size(); ++k)
    if (!(coords[k] > coords[k - 1]))
      throw std::invalid_argument("locate_front: coordinates must increase strictly");
  std::size_t in = 0, out = 0;
  if (!find_crossing(values, threshold, dir, in, out)) return std::nullopt;
  const double f = fraction(values[in], values[out], threshold);
  return coords[in] + f * (coords[out] - coords[in]);
}

std::optional<double> locate_front_uniform(std::span<const double> values, double x0, double dx,
                                           double threshold, FrontDirection dir) {
  std::size_t in = 0, out = 0;
  if (!find_crossing(values, threshold, dir, in, out)) return std::nullopt;
  const double f = fraction(values[in], values[out], threshold);
  const double step = out > in ? f : -f;
  return x0 + (static_cast<double>(in) + 0.5 + step) * dx;
}

std::optional<double> locate_front_x(const Field& T, int j, double threshold, FrontDirection dir) {
  const Grid& g = T.grid();
  if (j < 0 || j >= g.ny) throw std::out_of_range("locate_front_x: row out of range");
  return locate_front_uniform(std::span<const double>(T.data() + g.index(0, j), g.nx), g.x0, g.dx,
                              threshold, dir);
}

std::optional<double> locate_front_y(const Field& T, int i, double threshold, FrontDirection dir) {
  const Grid& g = T.grid();
  if (g.dim != 2) throw std::invalid_argument("locate_front_y: needs a 2D field");
  if (i < 0 || i >= g.nx) throw std::out_of_range("locate_front_y: column out of range");
  std::vector<double> col(g.ny);
  for (int j = 0; j < g.ny; ++j) col[j] = T(i, j);
  return locate_front_uniform(col, g.y0, g.dy, threshold, dir);
}

void FrontTrace::add(double t, double position) {
  if (!t_.empty() && !(t > t_.back()))
    throw std::invalid_argument("FrontTrace: times must increase strictly");
  t_.push_back(t);
  x_.push_back(position);
}

double FrontTrace::speed_to_date(std::size_t n) const {
  if (n == 0 || n >= t_.size()) return std::numeric_limits<double>::quiet_NaN();
  return (x_[n] - x_[0]) / (t_[n] - t_[0]);
}

SpeedFit estimate_speed(const FrontTrace& trace, double t_lo, double t_hi) {
  const auto& t = trace.times();
  const auto& x = trace.positions();
  double st = 0, sx = 0;
  int n = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < t_lo || t[k] > t_hi) continue;
    st += t[k];
    sx += x[k];
    ++n;
  }
  if (n < 5) throw std::invalid_argument("estimate_speed: fewer than 5 samples in window");
  const double tm = st / n, xm = sx / n;
  double stt = 0, stx = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < t_lo || t[k] > t_hi) continue;
    stt += (t[k] - tm) * (t[k] - tm);
    stx += (t[k] - tm) * (x[k] - xm);
  }
  const double slope = stx / stt;
  const double icpt = xm - slope * tm;
  double ss = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < t_lo || t[k] > t_hi) continue;
    const double r = x[k] - (icpt + slope * t[k]);
    ss += r * r;
  }
  return {slope, icpt, std::sqrt(ss / n), n};
}

}  // namespace adrfire
