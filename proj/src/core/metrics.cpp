#include "core/metrics.hpp"

#include <cmath>
#include <limits>

namespace airi {

SnrResult snr(const Image& truth, const Image& estimate) {
  if (!truth.same_dims(estimate)) throw_invalid("snr: image dimension mismatch");
  const double signal = l2_norm(truth);
  if (signal == 0.0) throw_invalid("snr: reference image is identically zero");
  const double residual = l2_distance(truth, estimate);
  if (residual == 0.0) return {std::numeric_limits<double>::max(), true};
  return {20.0 * std::log10(signal / residual), false};
}

SnrResult log_snr(const Image& truth, const Image& estimate, const DynRangeTransform& t) {
  return snr(rlog(truth, t), rlog(clip_nonneg(estimate), t));
}

SnrResult log_snr(const Image& truth, const Image& estimate, double a) {
  const double ref = peak(truth);
  DynRangeTransform t{a, ref > 0.0 ? ref : 1.0};
  return log_snr(truth, estimate, t);
}

}  // namespace airi
