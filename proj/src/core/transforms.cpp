#include "core/transforms.hpp"

#include <cmath>

namespace airi {

Image rlog(const Image& img, const DynRangeTransform& t) {
  t.validate();
  require_finite(img, "rlog");
  const double inv_ln_a = 1.0 / std::log(t.a);
  Image out = img;
  for (double& v : out.pixels()) {
    if (v < 0.0) throw_invalid("rlog: negative pixel value");
    v = t.x_max * std::log1p(t.a * v / t.x_max) * inv_ln_a;
  }
  return out;
}

Image rexp(const Image& img, const DynRangeTransform& t) {
  t.validate();
  require_finite(img, "rexp");
  const double ln_a = std::log(t.a);
  Image out = img;
  for (double& v : out.pixels()) {
    if (v < 0.0) throw_invalid("rexp: negative pixel value");
    if (v > t.x_max * (1.0 + 1e-12)) throw_invalid("rexp: pixel value above reference peak");
    v = t.x_max * std::expm1(std::min(v, t.x_max) / t.x_max * ln_a) / t.a;
  }
  return out;
}

Image soft_threshold(const Image& img, double tau) {
  if (!(tau >= 0.0)) throw_invalid("soft_threshold: negative threshold");
  Image out = img;
  for (double& v : out.pixels()) v = std::max(v - tau, 0.0);
  return out;
}

namespace {

// log-domain residual of the factor equation; zero iff (a*sigma+1)^(1/sigma0) = a
double expo_residual(double log_a, double sigma, double sigma0) {
  return std::log1p(sigma * std::exp(log_a)) / sigma0 - log_a;
}

double expo_residual_deriv(double log_a, double sigma, double sigma0) {
  const double sa = sigma * std::exp(log_a);
  return sa / (sigma0 * (sa + 1.0)) - 1.0;
}

}  // namespace

double solve_expo_factor(double sigma, double sigma0) {
  if (!(sigma > 0.0) || !(sigma0 < 1.0) || !(sigma < sigma0))
    throw_invalid("solve_expo_factor: require 0 < sigma < sigma0 < 1");

  constexpr double log_a_cap = 41.44653167389282;  // log(1e18)

  // The residual decreases from a = 1+, reaches its minimum where
  // a*sigma*(1 - sigma0) = sigma0, then increases without bound. The
  // expanding root lies to the right of the dip.
  double log_dip = std::log(sigma0 / (sigma * (1.0 - sigma0)));
  log_dip = std::max(log_dip, 1e-12);
  if (log_dip >= log_a_cap || expo_residual(log_dip, sigma, sigma0) >= 0.0)
    throw Error(ErrorCode::no_root,
                "solve_expo_factor: no root in (1, 1e18]; sigma too close to sigma0");

  double lo = log_dip;  // residual < 0
  double hi = lo;
  do {
    hi = std::min(hi + std::log(2.0) * 4.0, log_a_cap);
    if (hi >= log_a_cap && expo_residual(hi, sigma, sigma0) < 0.0)
      throw Error(ErrorCode::no_root, "solve_expo_factor: no sign change up to a = 1e18");
  } while (expo_residual(hi, sigma, sigma0) < 0.0);

  // Newton from the upper bracket end, falling back to bisection whenever the
  // step leaves the bracket.
  double x = hi;
  for (int it = 0; it < 200; ++it) {
    const double g = expo_residual(x, sigma, sigma0);
    if (std::abs(g) < 1e-13) break;
    (g < 0.0 ? lo : hi) = x;
    const double dg = expo_residual_deriv(x, sigma, sigma0);
    double next = x - g / dg;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
  }
  return std::exp(x);
}

}  // namespace airi
