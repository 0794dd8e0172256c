#pragma once

#include <string>

#include "core/image.hpp"

namespace airi {

// AIRIIMG1 raster format: 8-byte magic "AIRIIMG1", u32 LE width, u32 LE height,
// then width*height f64 LE pixel values row-major.

void save_image(const Image& img, const std::string& path);
Image load_image(const std::string& path);

// CSV rasters: one text row per pixel row, comma-separated values.
void save_image_csv(const Image& img, const std::string& path);
Image load_image_csv(const std::string& path);

/// Dispatches on the ".csv" extension, otherwise uses the binary format.
void save_image_auto(const Image& img, const std::string& path);
Image load_image_auto(const std::string& path);

}  // namespace airi
