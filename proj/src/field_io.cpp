#include "rzt/field_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

namespace rzt {

namespace {

constexpr char kMagic[16] = {'R', 'Z', 'F', 'L', 'D', '0', '0', '1',
                             0, 0, 0, 0, 0, 0, 0, 0};

// This code targets little-endian hosts; the format is little-endian on disk.
template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}

} // namespace

void write_field(const std::string& path, const Field& f) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("write_field: cannot open " + path);
  os.write(kMagic, sizeof(kMagic));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(f.spec.dim));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(f.spec.points_per_axis));
  put<double>(os, f.spec.half_width);
  for (const auto& v : f.values) {
    put<double>(os, v.real());
    put<double>(os, v.imag());
  }
  if (!os) throw std::runtime_error("write_field: write failed for " + path);
}

Field read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_field: cannot open " + path);
  char magic[16];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("read_field: bad RZF1 magic in " + path);
  const auto dim = get<std::uint32_t>(is);
  const auto n = get<std::uint32_t>(is);
  const auto L = get<double>(is);
  GridSpec spec(static_cast<int>(dim), static_cast<int>(n), L);
  Field f(spec);
  for (auto& v : f.values) {
    const double re = get<double>(is);
    const double im = get<double>(is);
    v = Complex(re, im);
  }
  if (!is) throw std::runtime_error("read_field: truncated file " + path);
  return f;
}

void write_field_atomic(const std::string& path, const Field& f) {
  const std::string tmp = path + ".tmp";
  write_field(tmp, f);
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("write_field_atomic: rename failed for " + path);
}

} // namespace rzt
