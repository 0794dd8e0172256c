#include "core/raster_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "common/binio.hpp"

namespace airi {

namespace {
constexpr char kMagic[9] = "AIRIIMG1";

bool has_csv_extension(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}
}  // namespace

void save_image(const Image& img, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw_io("cannot open for writing: " + path);
  write_magic(os, kMagic);
  write_u32le(os, static_cast<std::uint32_t>(img.width()));
  write_u32le(os, static_cast<std::uint32_t>(img.height()));
  for (double v : img.pixels()) write_f64le(os, v);
  if (!os) throw_io("write failed: " + path);
}

Image load_image(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw_io("cannot open: " + path);
  expect_magic(is, kMagic, "image");
  const std::uint32_t w = read_u32le(is);
  const std::uint32_t h = read_u32le(is);
  if (w == 0 || h == 0 || static_cast<std::uint64_t>(w) * h > (1ull << 32))
    throw_format("image header has implausible dimensions: " + path);
  std::vector<double> px(static_cast<std::size_t>(w) * h);
  for (double& v : px) v = read_f64le(is);
  return Image(static_cast<int>(w), static_cast<int>(h), std::move(px));
}

void save_image_csv(const Image& img, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw_io("cannot open for writing: " + path);
  os.precision(17);
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (c) os << ',';
      os << img(r, c);
    }
    os << '\n';
  }
  if (!os) throw_io("write failed: " + path);
}

Image load_image_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw_io("cannot open: " + path);
  std::vector<double> px;
  std::size_t width = 0, rows = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(ss, cell, ',')) {
      try {
        px.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw_format("csv raster: bad value '" + cell + "' in " + path);
      }
      ++cols;
    }
    if (rows == 0)
      width = cols;
    else if (cols != width)
      throw_format("csv raster: ragged rows in " + path);
    ++rows;
  }
  if (rows == 0 || width == 0) throw_format("csv raster: empty file " + path);
  return Image(static_cast<int>(width), static_cast<int>(rows), std::move(px));
}

void save_image_auto(const Image& img, const std::string& path) {
  has_csv_extension(path) ? save_image_csv(img, path) : save_image(img, path);
}

Image load_image_auto(const std::string& path) {
  return has_csv_extension(path) ? load_image_csv(path) : load_image(path);
}

}  // namespace airi
