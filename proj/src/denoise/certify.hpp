#pragma once

#include <span>
#include <vector>

#include "denoise/denoiser.hpp"

namespace airi {

struct CertificationResult {
  double max_norm = 0.0;              // max over probes of ||Jac(2D - Id)||
  std::vector<double> per_probe;

  bool passes(double slack = 1e-2) const { return max_norm <= 1.0 + slack; }
};

/// Estimates ||Jac(2D - Id)|| at each probe by power iteration on J^T J
/// (via the denoiser's jvp/vjp) and reports the maximum. The bound is local
/// to the probes, so probe diversity is the caller's responsibility.
/// Non-finite iterates raise a certification error.
CertificationResult certify_nonexpansive(const Denoiser& d, std::span<const Image> probes,
                                         int power_iters = 50);

/// Same power iteration at a single point, with an externally owned warm-start
/// vector (updated in place); shared by training and certification paths.
double jacobian_norm_at(const Denoiser& d, const Image& point, int power_iters,
                        std::vector<double>* warm_vector = nullptr);

}  // namespace airi
