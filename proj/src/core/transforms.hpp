#pragma once

#include "core/image.hpp"

namespace airi {

/// Parameters of the rlog/rexp dynamic-range transform pair: log/exponentiation
/// base factor `a` (> 1) and reference peak intensity `x_max` (> 0).
struct DynRangeTransform {
  double a = 1e4;
  double x_max = 1.0;

  void validate() const {
    if (!(a > 1.0)) throw_invalid("transform base factor a must exceed 1");
    if (!(x_max > 0.0)) throw_invalid("transform reference peak x_max must be positive");
  }
};

/// Per-pixel x_max * log_a(a*x/x_max + 1). Compresses dynamic range; maps
/// [x_max/a, x_max] onto [x_max*log_a(2), x_max].
Image rlog(const Image& img, const DynRangeTransform& t);

/// Per-pixel x_max * (a^(u/x_max) - 1) / a, the inverse of rlog on [0, x_max].
/// Pixels above x_max are rejected.
Image rexp(const Image& img, const DynRangeTransform& t);

/// Per-pixel max(x - tau, 0).
Image soft_threshold(const Image& img, double tau);

/// Solves (a*sigma + 1)^(1/sigma0) = a for the exponentiation factor a > 1.
///
/// The residual a |-> (1/sigma0)*log(a*sigma+1) - log(a) dips below zero and
/// rises again, so the equation has zero or two roots; the dynamic-range
/// expanding root (the larger one, a ~ 1/sigma) is returned. Roots exist only
/// when sigma is small enough relative to sigma0 (about sigma0/e); otherwise a
/// no-root error is raised.
double solve_expo_factor(double sigma, double sigma0);

}  // namespace airi
