#include "denoise/certify.hpp"

#include <cmath>

#include "common/rng.hpp"

namespace airi {

namespace {

Image map_2d_minus_id_jvp(const Denoiser& d, const Image& x, const Image& t) {
  Image out = d.jvp(x, t);
  for (std::size_t i = 0; i < out.size(); ++i)
    out.pixels()[i] = 2.0 * out.pixels()[i] - t.pixels()[i];
  return out;
}

Image map_2d_minus_id_vjp(const Denoiser& d, const Image& x, const Image& w) {
  Image out = d.vjp(x, w);
  for (std::size_t i = 0; i < out.size(); ++i)
    out.pixels()[i] = 2.0 * out.pixels()[i] - w.pixels()[i];
  return out;
}

}  // namespace

double jacobian_norm_at(const Denoiser& d, const Image& point, int power_iters,
                        std::vector<double>* warm_vector) {
  if (power_iters < 1) throw_invalid("jacobian_norm_at: need at least one power iteration");

  Image v(point.width(), point.height());
  if (warm_vector && warm_vector->size() == point.size()) {
    v.pixels() = *warm_vector;
  } else {
    Rng rng(derive_seed(0xce27f1ed, point.size()));
    for (double& p : v.pixels()) p = rng.normal();
  }
  double nv = l2_norm(v);
  if (nv == 0.0) {
    v.pixels()[0] = 1.0;
    nv = 1.0;
  }
  for (double& p : v.pixels()) p /= nv;

  double estimate = 0.0;
  for (int it = 0; it < power_iters; ++it) {
    Image jv = map_2d_minus_id_jvp(d, point, v);
    Image jtjv = map_2d_minus_id_vjp(d, point, jv);
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) rayleigh += v.pixels()[i] * jtjv.pixels()[i];
    if (!std::isfinite(rayleigh))
      throw Error(ErrorCode::certification, "power iteration produced non-finite values");
    estimate = std::max(rayleigh, 0.0);
    const double n = l2_norm(jtjv);
    if (n == 0.0) {
      estimate = 0.0;
      break;
    }
    for (double& p : jtjv.pixels()) p /= n;
    v = std::move(jtjv);
  }
  if (warm_vector) *warm_vector = v.pixels();
  return std::sqrt(estimate);
}

CertificationResult certify_nonexpansive(const Denoiser& d, std::span<const Image> probes,
                                         int power_iters) {
  if (probes.empty()) throw_invalid("certify_nonexpansive: no probes given");
  CertificationResult result;
  result.per_probe.reserve(probes.size());
  for (const Image& probe : probes) {
    const double n = jacobian_norm_at(d, probe, power_iters);
    result.per_probe.push_back(n);
    result.max_norm = std::max(result.max_norm, n);
  }
  return result;
}

}  // namespace airi
