#pragma once

#include "core/image.hpp"
#include "core/transforms.hpp"

namespace airi {

/// Reconstruction SNR in decibels. Exact recovery (zero residual) is reported
/// with `exact = true` and db set to the largest finite double.
struct SnrResult {
  double db = 0.0;
  bool exact = false;
};

/// 20*log10(||truth|| / ||truth - estimate||)
SnrResult snr(const Image& truth, const Image& estimate);

/// SNR of the rlog-compressed images; emphasizes faint-intensity fidelity.
/// The estimate is clipped at zero before the transform. Default metric base
/// is 2.5e3 (1e4 is the usual display base).
SnrResult log_snr(const Image& truth, const Image& estimate, const DynRangeTransform& t);
SnrResult log_snr(const Image& truth, const Image& estimate, double a = 2.5e3);

}  // namespace airi
