#include "acdc/blockdct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace acdc {

double min_value(const Raster& r) {
  return *std::min_element(r.values().begin(), r.values().end());
}

double max_value(const Raster& r) {
  return *std::max_element(r.values().begin(), r.values().end());
}

PixelImage make_image(int width, int height, int fill, PixelRange range) {
  PixelImage img;
  img.width = width;
  img.height = height;
  img.pixels.assign(static_cast<std::size_t>(width) * height, fill);
  img.range = range;
  return img;
}

BlockGrid make_grid(int width, int height, int n) {
  if (n < 2) {
    throw DimensionError("block size must be at least 2, got " + std::to_string(n));
  }
  if (width <= 0 || height <= 0 || width % n != 0 || height % n != 0) {
    throw DimensionError("image size " + std::to_string(width) + "x" + std::to_string(height) +
                         " is not a positive multiple of block size " + std::to_string(n));
  }
  return BlockGrid{n, width / n, height / n};
}

DctBasis::DctBasis(int n) : n_(n), basis_(static_cast<std::size_t>(n) * n) {
  const double pi = std::numbers::pi;
  for (int k = 0; k < n; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / n);
    for (int i = 0; i < n; ++i) {
      basis_[static_cast<std::size_t>(k) * n + i] = scale * std::cos(pi * (i + 0.5) * k / n);
    }
  }
}

// C = T B T^t, computed as two 1D passes through a scratch buffer.
void DctBasis::forward(std::span<const double> block, std::span<double> coeffs) const {
  const int n = n_;
  std::vector<double> tmp(static_cast<std::size_t>(n) * n);
  // rows: tmp = B T^t
  for (int y = 0; y < n; ++y) {
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int x = 0; x < n; ++x) {
        s += block[static_cast<std::size_t>(y) * n + x] * basis_[static_cast<std::size_t>(k) * n + x];
      }
      tmp[static_cast<std::size_t>(y) * n + k] = s;
    }
  }
  // columns: C = T tmp
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      double s = 0.0;
      for (int y = 0; y < n; ++y) {
        s += basis_[static_cast<std::size_t>(k) * n + y] * tmp[static_cast<std::size_t>(y) * n + x];
      }
      coeffs[static_cast<std::size_t>(k) * n + x] = s;
    }
  }
}

// B = T^t C T
void DctBasis::inverse(std::span<const double> coeffs, std::span<double> block) const {
  const int n = n_;
  std::vector<double> tmp(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    for (int x = 0; x < n; ++x) {
      double s = 0.0;
      for (int u = 0; u < n; ++u) {
        s += coeffs[static_cast<std::size_t>(v) * n + u] * basis_[static_cast<std::size_t>(u) * n + x];
      }
      tmp[static_cast<std::size_t>(v) * n + x] = s;
    }
  }
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      double s = 0.0;
      for (int v = 0; v < n; ++v) {
        s += basis_[static_cast<std::size_t>(v) * n + y] * tmp[static_cast<std::size_t>(v) * n + x];
      }
      block[static_cast<std::size_t>(y) * n + x] = s;
    }
  }
}

namespace {

void copy_block_in(const Raster& src, int n, int block_row, int block_col, std::span<double> out) {
  const int x0 = block_col * n;
  const int y0 = block_row * n;
  for (int y = 0; y < n; ++y) {
    const double* row = src.row(y0 + y) + x0;
    std::copy(row, row + n, out.begin() + static_cast<std::size_t>(y) * n);
  }
}

void copy_block_out(std::span<const double> in, int n, int block_row, int block_col, Raster& dst) {
  const int x0 = block_col * n;
  const int y0 = block_row * n;
  for (int y = 0; y < n; ++y) {
    double* row = dst.row(y0 + y) + x0;
    std::copy(in.begin() + static_cast<std::size_t>(y) * n,
              in.begin() + static_cast<std::size_t>(y + 1) * n, row);
  }
}

}  // namespace

CoefficientPlane forward_plane(const PixelImage& image, int block_size) {
  const BlockGrid grid = make_grid(image.width, image.height, block_size);
  const DctBasis basis(block_size);
  const int n = block_size;

  CoefficientPlane out{grid, Raster(image.width, image.height)};
  std::vector<double> block(static_cast<std::size_t>(n) * n);
  std::vector<double> coeffs(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
          block[static_cast<std::size_t>(y) * n + x] = image.at(c * n + x, r * n + y);
        }
      }
      basis.forward(block, coeffs);
      copy_block_out(coeffs, n, r, c, out.coeffs);
    }
  }
  return out;
}

Raster inverse_plane(const CoefficientPlane& plane) {
  const int n = plane.grid.n;
  const DctBasis basis(n);
  Raster out(plane.coeffs.width(), plane.coeffs.height());
  std::vector<double> coeffs(static_cast<std::size_t>(n) * n);
  std::vector<double> block(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < plane.grid.rows; ++r) {
    for (int c = 0; c < plane.grid.cols; ++c) {
      copy_block_in(plane.coeffs, n, r, c, coeffs);
      basis.inverse(coeffs, block);
      copy_block_out(block, n, r, c, out);
    }
  }
  return out;
}

DcFreePlane strip_dc(const PixelImage& image, int block_size) {
  const BlockGrid grid = make_grid(image.width, image.height, block_size);
  const int n = block_size;
  DcFreePlane out{grid, Raster(image.width, image.height), image.range};
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      double sum = 0.0;
      for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
          sum += image.at(c * n + x, r * n + y);
        }
      }
      const double mean = sum / (n * n);
      for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
          out.data.at(c * n + x, r * n + y) = image.at(c * n + x, r * n + y) - mean;
        }
      }
    }
  }
  return out;
}

DcPlane true_dcs(const PixelImage& image, int block_size) {
  const BlockGrid grid = make_grid(image.width, image.height, block_size);
  const int n = block_size;
  DcPlane out{grid, std::vector<double>(static_cast<std::size_t>(grid.blocks()))};
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      double sum = 0.0;
      for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
          sum += image.at(c * n + x, r * n + y);
        }
      }
      out.at(r, c) = sum / n;  // n * mean
    }
  }
  return out;
}

Raster apply_dc(const DcFreePlane& plane, const DcPlane& dcs) {
  if (dcs.grid != plane.grid) {
    throw DimensionError("DC plane grid does not match the DC-free plane");
  }
  const int n = plane.grid.n;
  Raster out(plane.data.width(), plane.data.height());
  for (int r = 0; r < plane.grid.rows; ++r) {
    for (int c = 0; c < plane.grid.cols; ++c) {
      const double offset = dcs.at(r, c) / n;
      for (int y = 0; y < n; ++y) {
        const double* src = plane.data.row(r * n + y) + c * n;
        double* dst = out.row(r * n + y) + c * n;
        for (int x = 0; x < n; ++x) {
          dst[x] = src[x] + offset;
        }
      }
    }
  }
  return out;
}

DcBounds dc_bounds(const DcFreePlane& plane) {
  const int n = plane.grid.n;
  DcBounds out{plane.grid, std::vector<Interval>(static_cast<std::size_t>(plane.grid.blocks()))};
  for (int r = 0; r < plane.grid.rows; ++r) {
    for (int c = 0; c < plane.grid.cols; ++c) {
      double lo = plane.data.at(c * n, r * n);
      double hi = lo;
      for (int y = 0; y < n; ++y) {
        const double* row = plane.data.row(r * n + y) + c * n;
        for (int x = 0; x < n; ++x) {
          lo = std::min(lo, row[x]);
          hi = std::max(hi, row[x]);
        }
      }
      out.intervals[plane.grid.index(r, c)] =
          Interval{n * (plane.range.lo - lo), n * (plane.range.hi - hi)};
    }
  }
  return out;
}

PixelImage finalize(const Raster& image, PixelRange range) {
  PixelImage out;
  out.width = image.width();
  out.height = image.height();
  out.range = range;
  out.pixels.resize(static_cast<std::size_t>(out.width) * out.height);
  auto src = image.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double v = std::round(src[i]);  // half away from zero
    out.pixels[i] = v < range.lo ? range.lo : (v > range.hi ? range.hi : static_cast<int>(v));
  }
  return out;
}

DcFreePlane plane_from_coefficients(const CoefficientPlane& plane, PixelRange range) {
  return DcFreePlane{plane.grid, inverse_plane(plane), range};
}

}  // namespace acdc
