#pragma once

#include <span>
#include <vector>

#include "acdc/types.hpp"

namespace acdc {

/// Orthonormal 2D DCT-II on n x n blocks. With this scaling the (0,0)
/// coefficient of a block equals n times its mean intensity, and the
/// inverse transform is the exact adjoint.
class DctBasis {
 public:
  explicit DctBasis(int n);

  int n() const { return n_; }

  /// block -> coefficients, both row-major spans of length n*n.
  void forward(std::span<const double> block, std::span<double> coeffs) const;

  /// coefficients -> block, exact inverse of forward.
  void inverse(std::span<const double> coeffs, std::span<double> block) const;

 private:
  int n_;
  std::vector<double> basis_;  // row k holds the k-th 1D basis vector
};

/// Per-block DCT coefficients of a full image, stored as an n*cols x n*rows
/// raster whose (r, c) tile holds block (r, c).
struct CoefficientPlane {
  BlockGrid grid;
  Raster coeffs;
};

/// Spatial-domain image whose every block has zero mean: the part of the
/// image determined by AC coefficients alone.
struct DcFreePlane {
  BlockGrid grid;
  Raster data;
  PixelRange range;
};

CoefficientPlane forward_plane(const PixelImage& image, int block_size);
Raster inverse_plane(const CoefficientPlane& plane);

/// Subtracts each block's mean. Equivalent to zeroing every DC coefficient
/// in the transform domain.
DcFreePlane strip_dc(const PixelImage& image, int block_size);

/// DC coefficient of every block of the original image (n times block mean).
DcPlane true_dcs(const PixelImage& image, int block_size);

/// Adds dcs.at(r, c) / n to every pixel of each block. No clamping.
Raster apply_dc(const DcFreePlane& plane, const DcPlane& dcs);

/// Valid DC interval of every block:
///   d_min = n * (t_min - min(block)),  d_max = n * (t_max - max(block)).
/// Any DC inside keeps all pixels of that block within the pixel range.
DcBounds dc_bounds(const DcFreePlane& plane);

/// Rounds half away from zero, then clamps into the pixel range.
PixelImage finalize(const Raster& image, PixelRange range);

/// Inverse-transforms every block. Intended for DC-stripped coefficients,
/// where the result has zero-mean blocks.
DcFreePlane plane_from_coefficients(const CoefficientPlane& plane, PixelRange range);

}  // namespace acdc
