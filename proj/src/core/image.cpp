#include "core/image.hpp"

#include <algorithm>
#include <limits>

namespace airi {

double peak(const Image& img) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : img.pixels()) m = std::max(m, v);
  return m;
}

double min_pixel(const Image& img) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : img.pixels()) m = std::min(m, v);
  return m;
}

double l2_norm(const Image& img) {
  double s = 0.0;
  for (double v : img.pixels()) s += v * v;
  return std::sqrt(s);
}

double l2_distance(const Image& a, const Image& b) {
  if (!a.same_dims(b)) throw_invalid("image dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.pixels()[i] - b.pixels()[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double linf_norm(const Image& img) {
  double m = 0.0;
  for (double v : img.pixels()) m = std::max(m, std::abs(v));
  return m;
}

bool all_finite(const Image& img) {
  for (double v : img.pixels())
    if (!std::isfinite(v)) return false;
  return true;
}

void require_finite(const Image& img, const char* what) {
  if (!all_finite(img)) throw_invalid(std::string(what) + ": non-finite pixel value");
}

Image clip_nonneg(const Image& img) {
  Image out = img;
  for (double& v : out.pixels()) v = std::max(v, 0.0);
  return out;
}

Image operator+(const Image& a, const Image& b) {
  if (!a.same_dims(b)) throw_invalid("image dimension mismatch");
  Image out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.pixels()[i] += b.pixels()[i];
  return out;
}

Image operator-(const Image& a, const Image& b) {
  if (!a.same_dims(b)) throw_invalid("image dimension mismatch");
  Image out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.pixels()[i] -= b.pixels()[i];
  return out;
}

Image operator*(double s, const Image& a) {
  Image out = a;
  for (double& v : out.pixels()) v *= s;
  return out;
}

}  // namespace airi
