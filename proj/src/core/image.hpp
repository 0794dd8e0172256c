#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "common/errors.hpp"

namespace airi {

/// Nonnegative-intensity 2-D raster, row-major doubles. Intermediate solver
/// iterates may carry negative values; nonnegativity is restored by the
/// denoisers rather than enforced here.
class Image {
public:
  Image() = default;

  Image(int width, int height, double fill = 0.0)
      : w_(width), h_(height), px_(checked_size(width, height), fill) {}

  Image(int width, int height, std::vector<double> pixels) : w_(width), h_(height) {
    if (pixels.size() != checked_size(width, height))
      throw_invalid("pixel count does not match image dimensions");
    px_ = std::move(pixels);
  }

  int width() const { return w_; }
  int height() const { return h_; }
  std::size_t size() const { return px_.size(); }

  double& operator()(int row, int col) { return px_[static_cast<std::size_t>(row) * w_ + col]; }
  double operator()(int row, int col) const {
    return px_[static_cast<std::size_t>(row) * w_ + col];
  }

  double* data() { return px_.data(); }
  const double* data() const { return px_.data(); }
  std::vector<double>& pixels() { return px_; }
  const std::vector<double>& pixels() const { return px_; }

  bool same_dims(const Image& o) const { return w_ == o.w_ && h_ == o.h_; }

private:
  static std::size_t checked_size(int w, int h) {
    if (w < 1 || h < 1) throw_invalid("image dimensions must be at least 1x1");
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  }

  int w_ = 0;
  int h_ = 0;
  std::vector<double> px_;
};

double peak(const Image& img);
double min_pixel(const Image& img);
double l2_norm(const Image& img);
double l2_distance(const Image& a, const Image& b);
double linf_norm(const Image& img);
bool all_finite(const Image& img);
void require_finite(const Image& img, const char* what);

/// max(x, 0) per pixel
Image clip_nonneg(const Image& img);

Image operator+(const Image& a, const Image& b);
Image operator-(const Image& a, const Image& b);
Image operator*(double s, const Image& a);

}  // namespace airi
