#pragma once

#include <cstdint>
#include <string>

#include "rimodel/operator.hpp"

namespace airi {

/// Complex measurements z with their uv coordinates and the Gaussian noise
/// standard deviation eta (real and imaginary parts each have std eta/sqrt(2)).
struct VisibilitySet {
  UVCoverage uv;
  cvec data;
  double eta = 0.0;

  void validate() const;
};

/// z = H x + e, deterministic under the seed.
VisibilitySet simulate_measurements(const RIOperator& op, const Image& truth, double eta,
                                    std::uint64_t seed);

/// Real part of H* z, no extra normalization: the adaptive peak heuristic
/// consumes its raw maximum.
Image back_project(const LinearOperator& op, const VisibilitySet& vis);

/// Two-sigma chi-squared radius for the l2 data-fidelity ball:
/// ||e||^2 = (eta^2/2) chi2_{2M} has mean eta^2 M and std eta^2 sqrt(M),
/// giving eps = eta * sqrt(M + 2 sqrt(M)).
double epsilon_bound(double eta, std::size_t m);

// AIRIVIS1 format: 8-byte magic, u64 LE sample count M, f64 LE eta, then M
// records of (u, v, re, im, weight), all f64 LE.
void save_visibilities(const VisibilitySet& vis, const std::string& path);
VisibilitySet load_visibilities(const std::string& path);

}  // namespace airi
