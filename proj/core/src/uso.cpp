#include "acdc/uso.hpp"

#include <limits>

namespace acdc {

AdjustRange adjust_range(const DcPlane& dcs, const DcBounds& bounds) {
  if (!(dcs.grid == bounds.grid)) throw DimensionError("adjust_range: grid mismatch");
  const double n = static_cast<double>(dcs.grid.n);

  AdjustRange out;
  out.per_block.reserve(dcs.dc.size());
  out.lo = -std::numeric_limits<double>::infinity();
  out.hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dcs.dc.size(); ++i) {
    const Interval& iv = bounds.intervals[i];
    const Interval adj{(iv.lo - dcs.dc[i]) / n, (iv.hi - dcs.dc[i]) / n};
    out.per_block.push_back(adj);
    if (adj.lo > out.lo) out.lo = adj.lo;
    if (adj.hi < out.hi) out.hi = adj.hi;
  }
  return out;
}

double global_adjustment(const DcPlane& dcs, const DcBounds& bounds) {
  const AdjustRange range = adjust_range(dcs, bounds);
  return 0.5 * (range.lo + range.hi);
}

Raster postprocess(const Raster& image, PixelRange range) {
  const double lo = min_value(image);
  const double hi = max_value(image);
  const double span = hi - lo;

  Raster out(image.width(), image.height());
  auto src = image.values();
  auto dst = out.values();
  if (span > range.width()) {
    const double scale = range.width() / span;
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = (src[i] - lo) * scale + range.lo;
    return out;
  }
  double shift = 0.0;
  if (lo < range.lo) {
    shift = range.lo - lo;
  } else if (hi > range.hi) {
    shift = range.hi - hi;
  }
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] + shift;
  return out;
}

UsoResult recover_uso_traced(const DcFreePlane& plane, DcEstimator estimator) {
  const DcBounds bounds = dc_bounds(plane);
  const double n = static_cast<double>(plane.grid.n);

  UsoResult out;
  Raster sum(plane.data.width(), plane.data.height(), 0.0);
  for (std::size_t k = 0; k < kAllCorners.size(); ++k) {
    const Corner corner = kAllCorners[k];
    EstimateResult est = estimate_plane(plane, corner, 0.0, false, nullptr, estimator);
    const double shift = global_adjustment(est.dcs, bounds);
    for (double& dc : est.dcs.dc) dc += n * shift;

    Raster image = apply_dc(plane, est.dcs);
    auto src = image.values();
    auto dst = sum.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
    out.corners[k] = {corner, shift, {min_value(image), max_value(image)}, std::move(image)};
  }

  auto acc = sum.values();
  for (double& v : acc) v *= 0.25;
  out.averaged = std::move(sum);
  out.image = finalize(postprocess(out.averaged, plane.range), plane.range);
  return out;
}

PixelImage recover_uso(const DcFreePlane& plane, DcEstimator estimator) {
  return recover_uso_traced(plane, estimator).image;
}

}  // namespace acdc
