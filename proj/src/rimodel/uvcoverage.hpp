#pragma once

#include <cstddef>
#include <vector>

#include "rimodel/antenna.hpp"

namespace airi {

/// Spatial-frequency samples normalized to radians per pixel, |u|,|v| < pi.
/// Only one sample of each conjugate pair is stored; the measurement operator
/// realizes the Hermitian symmetry of real skies through its real-part
/// adjoint. Weights are carried for format compatibility and are not applied
/// by the operator.
struct UVCoverage {
  struct Sample {
    double u = 0.0;
    double v = 0.0;
  };

  std::vector<Sample> samples;
  std::vector<double> weights;
  double delta_t_hours = 0.0;

  std::size_t count() const { return samples.size(); }
  void validate() const;
};

struct UVGenResult {
  UVCoverage coverage;
  std::size_t dropped = 0;  // samples falling outside [-pi, pi) after scaling
};

/// Earth-rotation synthesis: every antenna pair contributes one uv point per
/// hour-angle step. Baselines are projected for the given declination over
/// hour angles centered on transit, converted to wavelengths at the fixed
/// observing wavelength, and scaled to radians per pixel via field_scale.
/// Samples landing outside [-pi, pi) are dropped and counted.
UVGenResult generate_uv(const AntennaArray& array, double declination_rad, double span_hours,
                        int n_steps, double field_scale_rad_per_px,
                        double wavelength_m = 0.21);

}  // namespace airi
