#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace acdc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Image or grid shape does not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or truncated input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input using a feature this toolkit does not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A search interval with no feasible point.
class EmptyRangeError : public Error {
 public:
  using Error::Error;
};

/// Input too small for the requested analysis window.
class TooSmallError : public Error {
 public:
  using Error::Error;
};

/// Valid intensity range [lo, hi] of pixel values.
struct PixelRange {
  int lo = 0;
  int hi = 255;

  double width() const { return static_cast<double>(hi) - lo; }
  bool contains(double v) const { return v >= lo && v <= hi; }
};

/// Real-valued 2D grid, row-major.
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, double fill = 0.0)
      : width_(width), height_(height),
        data_(static_cast<std::size_t>(width) * height, fill) {}

  int width() const { return width_; }
  int height() const { return height_; }

  double& at(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  double at(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  double* row(int y) { return data_.data() + static_cast<std::size_t>(y) * width_; }
  const double* row(int y) const { return data_.data() + static_cast<std::size_t>(y) * width_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

double min_value(const Raster& r);
double max_value(const Raster& r);

/// Integer-valued grayscale image with values in [range.lo, range.hi].
struct PixelImage {
  int width = 0;
  int height = 0;
  std::vector<int> pixels;  // row-major
  PixelRange range;

  int& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  int at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

PixelImage make_image(int width, int height, int fill, PixelRange range = {});

/// Partition of an image into square blocks of side n.
struct BlockGrid {
  int n = 8;
  int cols = 0;
  int rows = 0;

  int blocks() const { return cols * rows; }
  int index(int block_row, int block_col) const { return block_row * cols + block_col; }
  bool operator==(const BlockGrid&) const = default;
};

/// Throws DimensionError unless width and height are positive multiples of n.
BlockGrid make_grid(int width, int height, int n);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double clamp(double v) const { return v < lo ? lo : (v > hi ? hi : v); }
};

/// Per-block DC coefficient values.
struct DcPlane {
  BlockGrid grid;
  std::vector<double> dc;  // row-major by block

  double& at(int block_row, int block_col) { return dc[grid.index(block_row, block_col)]; }
  double at(int block_row, int block_col) const { return dc[grid.index(block_row, block_col)]; }
};

/// Per-block valid DC interval [d_min, d_max].
struct DcBounds {
  BlockGrid grid;
  std::vector<Interval> intervals;  // row-major by block

  const Interval& at(int block_row, int block_col) const {
    return intervals[grid.index(block_row, block_col)];
  }
};

}  // namespace acdc
