#include "acdc/dcf.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace acdc {
namespace {

constexpr char kMagic[4] = {'D', 'C', 'F', '1'};

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const std::string& in, std::size_t pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  }
  return v;
}

double get_f64(const std::string& in, std::size_t pos) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) {
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
  }
  return std::bit_cast<double>(bits);
}

}  // namespace

DcfFile load_dcf(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = std::move(buf).str();

  if (data.size() < 20 || std::memcmp(data.data(), kMagic, 4) != 0) {
    throw ParseError("dcf: bad magic in " + path);
  }
  const std::uint32_t width = get_u32(data, 4);
  const std::uint32_t height = get_u32(data, 8);
  const std::uint32_t n = get_u32(data, 12);
  const std::uint32_t flags = get_u32(data, 16);
  if (width == 0 || height == 0 || n == 0) throw ParseError("dcf: zero dimension");
  if (width > (1u << 20) || height > (1u << 20) || n > 1024) {
    throw ParseError("dcf: implausible header");
  }

  DcfFile out;
  out.plane.grid = make_grid(static_cast<int>(width), static_cast<int>(height),
                             static_cast<int>(n));
  out.dc_stripped = (flags & kDcfFlagDcStripped) != 0;

  const std::size_t coeff_count = static_cast<std::size_t>(width) * height;
  if (data.size() - 20 != coeff_count * 8) throw ParseError("dcf: payload size mismatch");

  out.plane.coeffs = Raster(static_cast<int>(width), static_cast<int>(height));
  const BlockGrid& grid = out.plane.grid;
  std::size_t pos = 20;
  for (int br = 0; br < grid.rows; ++br) {
    for (int bc = 0; bc < grid.cols; ++bc) {
      for (int y = 0; y < grid.n; ++y) {
        for (int x = 0; x < grid.n; ++x) {
          const double v = get_f64(data, pos);
          pos += 8;
          if (out.dc_stripped && y == 0 && x == 0 && v != 0.0) {
            throw ParseError("dcf: DC-stripped file has a nonzero DC coefficient");
          }
          out.plane.coeffs.at(bc * grid.n + x, br * grid.n + y) = v;
        }
      }
    }
  }
  return out;
}

void save_dcf(const std::string& path, const CoefficientPlane& plane, bool dc_stripped) {
  const BlockGrid& grid = plane.grid;
  std::string data;
  data.reserve(20 + static_cast<std::size_t>(grid.blocks()) * grid.n * grid.n * 8);
  data.append(kMagic, 4);
  put_u32(data, static_cast<std::uint32_t>(plane.coeffs.width()));
  put_u32(data, static_cast<std::uint32_t>(plane.coeffs.height()));
  put_u32(data, static_cast<std::uint32_t>(grid.n));
  put_u32(data, dc_stripped ? kDcfFlagDcStripped : 0u);

  for (int br = 0; br < grid.rows; ++br) {
    for (int bc = 0; bc < grid.cols; ++bc) {
      for (int y = 0; y < grid.n; ++y) {
        for (int x = 0; x < grid.n; ++x) {
          const double v = plane.coeffs.at(bc * grid.n + x, br * grid.n + y);
          if (dc_stripped && y == 0 && x == 0 && v != 0.0) {
            throw Error("dcf: refusing to write nonzero DC with the stripped flag set");
          }
          put_f64(data, v);
        }
      }
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw ParseError("cannot write " + path);
}

}  // namespace acdc
