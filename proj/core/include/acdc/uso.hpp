#pragma once

#include <array>
#include <vector>

#include "acdc/blockdct.hpp"
#include "acdc/scan.hpp"
#include "acdc/types.hpp"

namespace acdc {

/// Per-block global-brightness adjustment intervals and their intersection.
/// Block i tolerates a brightness shift s iff s lies in
/// [(d_min_i - DC_i)/n, (d_max_i - DC_i)/n]; the global interval is the
/// intersection over all blocks and may be empty (lo > hi).
struct AdjustRange {
  std::vector<Interval> per_block;  // row-major by block
  double lo = 0.0;                  // max of per-block lower ends
  double hi = 0.0;                  // min of per-block upper ends
};

AdjustRange adjust_range(const DcPlane& dcs, const DcBounds& bounds);

/// Brightness shift (d*_min + d*_max)/2 that centers the image inside the
/// intersected adjustment interval. The midpoint is returned unchanged even
/// when the intersection is empty.
double global_adjustment(const DcPlane& dcs, const DcBounds& bounds);

/// If the image's dynamic range exceeds the pixel range, affinely map
/// [min, max] onto [range.lo, range.hi]; otherwise shift by the minimal
/// constant that brings every value in range (zero if already inside).
Raster postprocess(const Raster& image, PixelRange range);

struct CornerScan {
  Corner corner = Corner::TopLeft;
  double shift = 0.0;     // applied global brightness adjustment
  Interval raw_range;     // min/max of the adjusted real-valued image
  Raster image;           // adjusted real-valued reconstruction, pre-averaging
};

struct UsoResult {
  PixelImage image;
  Raster averaged;        // four-scan average before postprocess/finalize
  std::array<CornerScan, 4> corners;
};

/// Baseline recovery: per corner, an unbounded relative scan (dc0 = 0)
/// followed by the global brightness adjustment; the four adjusted images
/// are averaged, post-processed into range and rounded.
UsoResult recover_uso_traced(const DcFreePlane& plane,
                             DcEstimator estimator = DcEstimator::Mean);

PixelImage recover_uso(const DcFreePlane& plane, DcEstimator estimator = DcEstimator::Mean);

}  // namespace acdc
