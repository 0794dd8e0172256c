#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "common/errors.hpp"

namespace airi {

/// Antenna positions in a local east-north-up frame (meters) at the given
/// site latitude. Baselines are projected to the uv plane with the standard
/// earth-rotation synthesis geometry.
struct AntennaArray {
  std::vector<std::array<double, 3>> positions;  // (east, north, up) meters
  double latitude = 0.0;                         // radians

  void validate() const;
  std::size_t baseline_count() const { return positions.size() * (positions.size() - 1) / 2; }
};

/// CSV with one "x,y,z" line per antenna (meters, ENU). '#' starts a comment.
AntennaArray load_antennas_csv(const std::string& path, double latitude);

/// Ring-plus-core synthetic layout used for tests and demo runs.
AntennaArray make_test_array(int n_antennas, double max_baseline_m, double latitude,
                             std::uint64_t seed);

}  // namespace airi
