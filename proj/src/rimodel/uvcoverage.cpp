#include "rimodel/uvcoverage.hpp"

#include <cmath>

namespace airi {

void UVCoverage::validate() const {
  if (samples.empty()) throw_invalid("uv coverage is empty");
  if (weights.size() != samples.size()) throw_invalid("uv coverage: weight count mismatch");
  for (const auto& s : samples) {
    if (!std::isfinite(s.u) || !std::isfinite(s.v)) throw_invalid("uv coverage: non-finite sample");
    if (!(std::abs(s.u) < M_PI) || !(std::abs(s.v) < M_PI))
      throw_invalid("uv coverage: sample outside [-pi, pi)");
  }
  for (double w : weights)
    if (!(w >= 0.0)) throw_invalid("uv coverage: negative weight");
}

UVGenResult generate_uv(const AntennaArray& array, double declination_rad, double span_hours,
                        int n_steps, double field_scale_rad_per_px, double wavelength_m) {
  array.validate();
  if (n_steps < 1) throw_invalid("generate_uv: n_steps must be at least 1");
  if (!(span_hours > 0.0)) throw_invalid("generate_uv: hour-angle span must be positive");
  if (!(field_scale_rad_per_px > 0.0)) throw_invalid("generate_uv: field scale must be positive");
  if (!(wavelength_m > 0.0)) throw_invalid("generate_uv: wavelength must be positive");

  const double sin_lat = std::sin(array.latitude);
  const double cos_lat = std::cos(array.latitude);
  const double sin_dec = std::sin(declination_rad);
  const double cos_dec = std::cos(declination_rad);
  const double hour_to_rad = 2.0 * M_PI / 24.0;  // sidereal-day approximation

  UVGenResult result;
  result.coverage.delta_t_hours = span_hours;
  const std::size_t n_ant = array.positions.size();

  for (int step = 0; step < n_steps; ++step) {
    // hour angles centered on transit; a single step observes at transit
    const double frac = (n_steps == 1) ? 0.5 : static_cast<double>(step) / (n_steps - 1);
    const double h = (frac - 0.5) * span_hours * hour_to_rad;
    const double sin_h = std::sin(h);
    const double cos_h = std::cos(h);
    for (std::size_t i = 0; i < n_ant; ++i) {
      for (std::size_t j = i + 1; j < n_ant; ++j) {
        const double be = array.positions[j][0] - array.positions[i][0];
        const double bn = array.positions[j][1] - array.positions[i][1];
        const double bu = array.positions[j][2] - array.positions[i][2];
        // ENU -> equatorial (X toward h=0 on the equator, Y toward h=-6h, Z north)
        const double bx = -bn * sin_lat + bu * cos_lat;
        const double by = be;
        const double bz = bn * cos_lat + bu * sin_lat;
        // baseline projection onto the uv plane, in wavelengths
        const double u_wl = (sin_h * bx + cos_h * by) / wavelength_m;
        const double v_wl = (-sin_dec * cos_h * bx + sin_dec * sin_h * by + cos_dec * bz) /
                            wavelength_m;
        // one pixel spans field_scale radians, so the phase gradient per pixel
        // is 2*pi * (baseline in wavelengths) * field_scale
        const double u = 2.0 * M_PI * u_wl * field_scale_rad_per_px;
        const double v = 2.0 * M_PI * v_wl * field_scale_rad_per_px;
        if (std::abs(u) < M_PI && std::abs(v) < M_PI) {
          result.coverage.samples.push_back({u, v});
          result.coverage.weights.push_back(1.0);
        } else {
          ++result.dropped;
        }
      }
    }
  }
  if (result.coverage.samples.empty())
    throw Error(ErrorCode::invalid_argument,
                "generate_uv: all samples fell outside the grid (empty coverage)");
  return result;
}

}  // namespace airi
