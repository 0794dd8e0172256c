#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "common/errors.hpp"

namespace airi {

// Little-endian scalar serialization. All binary formats in this project are
// little-endian regardless of host order.

namespace detail {

template <typename T>
inline T byteswap_if_needed(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    unsigned char* p = reinterpret_cast<unsigned char*>(&v);
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(p[i], p[sizeof(T) - 1 - i]);
    return v;
  }
}

}  // namespace detail

inline void write_u32le(std::ostream& os, std::uint32_t v) {
  v = detail::byteswap_if_needed(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

inline void write_u64le(std::ostream& os, std::uint64_t v) {
  v = detail::byteswap_if_needed(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

inline void write_f64le(std::ostream& os, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, sizeof v);
  write_u64le(os, v);
}

inline std::uint32_t read_u32le(std::istream& is) {
  std::uint32_t v;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw_format("unexpected end of file");
  return detail::byteswap_if_needed(v);
}

inline std::uint64_t read_u64le(std::istream& is) {
  std::uint64_t v;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw_format("unexpected end of file");
  return detail::byteswap_if_needed(v);
}

inline double read_f64le(std::istream& is) {
  const std::uint64_t v = read_u64le(is);
  double d;
  std::memcpy(&d, &v, sizeof d);
  return d;
}

inline void write_magic(std::ostream& os, const char (&magic)[9]) { os.write(magic, 8); }

inline void expect_magic(std::istream& is, const char (&magic)[9], const std::string& what) {
  char buf[8];
  if (!is.read(buf, 8) || std::memcmp(buf, magic, 8) != 0)
    throw_format("bad magic for " + what + " file");
}

}  // namespace airi
