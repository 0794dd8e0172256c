#include "rimodel/antenna.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "common/rng.hpp"

namespace airi {

void AntennaArray::validate() const {
  if (positions.size() < 2) throw_invalid("antenna array needs at least 2 antennas");
  if (!std::isfinite(latitude)) throw_invalid("antenna array latitude must be finite");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (double c : positions[i])
      if (!std::isfinite(c)) throw_invalid("antenna position has non-finite coordinate");
    for (std::size_t j = 0; j < i; ++j) {
      if (positions[i] == positions[j]) throw_invalid("duplicate antenna positions");
    }
  }
}

AntennaArray load_antennas_csv(const std::string& path, double latitude) {
  std::ifstream is(path);
  if (!is) throw_io("cannot open antenna file: " + path);
  AntennaArray array;
  array.latitude = latitude;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    std::array<double, 3> p{};
    std::string cell;
    for (int k = 0; k < 3; ++k) {
      if (!std::getline(ss, cell, ','))
        throw_format("antenna csv line " + std::to_string(lineno) + ": expected x,y,z");
      try {
        p[static_cast<std::size_t>(k)] = std::stod(cell);
      } catch (const std::exception&) {
        throw_format("antenna csv line " + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    array.positions.push_back(p);
  }
  array.validate();
  return array;
}

AntennaArray make_test_array(int n_antennas, double max_baseline_m, double latitude,
                             std::uint64_t seed) {
  if (n_antennas < 2) throw_invalid("make_test_array: need at least 2 antennas");
  AntennaArray array;
  array.latitude = latitude;
  Rng rng(derive_seed(seed, 0xa27a7));
  const int n_core = n_antennas / 2;
  for (int i = 0; i < n_antennas; ++i) {
    // half in a dense scattered core, half on a jittered outer ring
    double r, theta;
    if (i < n_core) {
      r = 0.15 * max_baseline_m * std::sqrt(rng.uniform());
      theta = rng.uniform(0.0, 2.0 * M_PI);
    } else {
      r = 0.5 * max_baseline_m * rng.uniform(0.7, 1.0);
      theta = 2.0 * M_PI * (i - n_core) / std::max(1, n_antennas - n_core) + rng.uniform(0.0, 0.2);
    }
    array.positions.push_back({r * std::cos(theta), r * std::sin(theta), rng.uniform(0.0, 2.0)});
  }
  array.validate();
  return array;
}

}  // namespace airi
