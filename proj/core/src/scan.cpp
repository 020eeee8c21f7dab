#include "acdc/scan.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace acdc {
namespace {

// Boundary pixels of `view` facing a neighbor on `side`, top-to-bottom or
// left-to-right.
void boundary_facing(const ConstBlockView& view, Side side, std::vector<double>& out) {
  const int n = view.n;
  out.resize(static_cast<std::size_t>(n));
  switch (side) {
    case Side::Left:
      for (int y = 0; y < n; ++y) out[static_cast<std::size_t>(y)] = view.at(y, 0);
      break;
    case Side::Right:
      for (int y = 0; y < n; ++y) out[static_cast<std::size_t>(y)] = view.at(y, n - 1);
      break;
    case Side::Top:
      for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = view.at(0, x);
      break;
    case Side::Bottom:
      for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = view.at(n - 1, x);
      break;
  }
}

Side opposite(Side side) {
  switch (side) {
    case Side::Left: return Side::Right;
    case Side::Right: return Side::Left;
    case Side::Top: return Side::Bottom;
    case Side::Bottom: return Side::Top;
  }
  return Side::Left;
}

double population_variance(const std::vector<double>& v) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double acc = 0.0;
  for (double x : v) {
    const double d = x - mean;
    acc += d * d;
  }
  return acc / static_cast<double>(v.size());
}

double reduce_diffs(std::vector<double> v, DcEstimator estimator) {
  if (estimator == DcEstimator::Mean) {
    double mean = 0.0;
    for (double x : v) mean += x;
    return mean / static_cast<double>(v.size());
  }
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size();
  if (m % 2 == 1) return v[m / 2];
  return 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

}  // namespace

const char* corner_name(Corner corner) {
  switch (corner) {
    case Corner::TopLeft: return "top-left";
    case Corner::TopRight: return "top-right";
    case Corner::BottomLeft: return "bottom-left";
    case Corner::BottomRight: return "bottom-right";
  }
  return "?";
}

BlockRef corner_block(Corner corner, const BlockGrid& grid) {
  const int last_row = grid.rows - 1;
  const int last_col = grid.cols - 1;
  switch (corner) {
    case Corner::TopLeft: return {0, 0};
    case Corner::TopRight: return {0, last_col};
    case Corner::BottomLeft: return {last_row, 0};
    case Corner::BottomRight: return {last_row, last_col};
  }
  return {0, 0};
}

std::vector<ScanStep> scan_order(Corner corner, const BlockGrid& grid) {
  const bool from_top = corner == Corner::TopLeft || corner == Corner::TopRight;
  const bool from_left = corner == Corner::TopLeft || corner == Corner::BottomLeft;
  const int row_step = from_top ? 1 : -1;
  const int col_step = from_left ? 1 : -1;
  const int row0 = from_top ? 0 : grid.rows - 1;
  const int col0 = from_left ? 0 : grid.cols - 1;

  std::vector<ScanStep> order;
  order.reserve(static_cast<std::size_t>(grid.blocks()));
  for (int r = row0; r >= 0 && r < grid.rows; r += row_step) {
    for (int c = col0; c >= 0 && c < grid.cols; c += col_step) {
      ScanStep step;
      step.block = {r, c};
      if (c != col0) step.preds[step.pred_count++] = {r, c - col_step};
      if (r != row0) step.preds[step.pred_count++] = {r - row_step, c};
      order.push_back(step);
    }
  }
  return order;
}

ConstBlockView block_view(const Raster& raster, const BlockGrid& grid, int block_row,
                          int block_col) {
  ConstBlockView view;
  view.n = grid.n;
  view.stride = raster.width();
  const std::size_t off = static_cast<std::size_t>(block_row) * grid.n * raster.width() +
                          static_cast<std::size_t>(block_col) * grid.n;
  view.top_left = raster.values().data() + off;
  return view;
}

Prediction predict_dc(const ConstBlockView& ref, const ConstBlockView& target, Side side,
                      DcEstimator estimator) {
  assert(ref.n == target.n);
  const int n = ref.n;

  // `side` locates the reference relative to the target, so the reference
  // exposes the opposite face.
  std::vector<double> r, q;
  boundary_facing(ref, opposite(side), r);
  boundary_facing(target, side, q);

  Prediction out;
  double best = 0.0;
  std::vector<double> diffs;
  for (Pattern pattern : {Pattern::Straight, Pattern::DiagonalDown, Pattern::DiagonalUp}) {
    diffs.clear();
    switch (pattern) {
      case Pattern::Straight:
        for (int i = 0; i < n; ++i) diffs.push_back(r[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i)]);
        break;
      case Pattern::DiagonalDown:
        for (int i = 0; i + 1 < n; ++i) diffs.push_back(r[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i) + 1]);
        break;
      case Pattern::DiagonalUp:
        for (int i = 0; i + 1 < n; ++i) diffs.push_back(r[static_cast<std::size_t>(i) + 1] - q[static_cast<std::size_t>(i)]);
        break;
    }
    const double score = population_variance(diffs);
    const int pi = static_cast<int>(pattern);
    out.scores[static_cast<std::size_t>(pi)] = score;
    if (pattern == Pattern::Straight || score < best) {
      best = score;
      out.pattern = pattern;
      out.dc = static_cast<double>(n) * reduce_diffs(diffs, estimator);
    }
  }
  return out;
}

ScanPredictor::ScanPredictor(const DcFreePlane& plane, Corner corner, DcEstimator estimator)
    : corner_(corner), grid_(plane.grid), order_(scan_order(corner, plane.grid)) {
  const std::size_t count = static_cast<std::size_t>(grid_.blocks());
  offset_h_.assign(count, 0.0);
  offset_v_.assign(count, 0.0);

  // Pattern choice and the estimate's dependence on the reference are both
  // invariant to a constant shift of either block, so predictions taken on
  // the DC-free plane act as per-edge base offsets: the full prediction for
  // a block is its base offset plus the predecessor's current DC.
  for (const ScanStep& step : order_) {
    const ConstBlockView target = block_view(plane.data, grid_, step.block.row, step.block.col);
    for (int k = 0; k < step.pred_count; ++k) {
      const BlockRef pred = step.preds[static_cast<std::size_t>(k)];
      const ConstBlockView ref = block_view(plane.data, grid_, pred.row, pred.col);
      Side side;
      if (pred.row == step.block.row) {
        side = pred.col < step.block.col ? Side::Left : Side::Right;
      } else {
        side = pred.row < step.block.row ? Side::Top : Side::Bottom;
      }
      const double dc = predict_dc(ref, target, side, estimator).dc;
      const std::size_t idx = static_cast<std::size_t>(grid_.index(step.block.row, step.block.col));
      if (pred.row == step.block.row) {
        offset_h_[idx] = dc;
      } else {
        offset_v_[idx] = dc;
      }
    }
  }
}

EstimateResult ScanPredictor::run(double dc0, bool bounding, const DcBounds* bounds) const {
  assert(!bounding || bounds != nullptr);
  EstimateResult out;
  out.dcs.grid = grid_;
  out.dcs.dc.assign(static_cast<std::size_t>(grid_.blocks()), 0.0);
  out.flow.total_blocks = grid_.blocks();

  for (const ScanStep& step : order_) {
    const std::size_t idx = static_cast<std::size_t>(grid_.index(step.block.row, step.block.col));
    double est;
    if (step.pred_count == 0) {
      est = dc0;
    } else {
      double acc = 0.0;
      for (int k = 0; k < step.pred_count; ++k) {
        const BlockRef pred = step.preds[static_cast<std::size_t>(k)];
        const std::size_t pidx = static_cast<std::size_t>(grid_.index(pred.row, pred.col));
        const double offset = pred.row == step.block.row ? offset_h_[idx] : offset_v_[idx];
        acc += offset + out.dcs.dc[pidx];
      }
      est = acc / static_cast<double>(step.pred_count);
    }
    if (bounding) {
      const Interval iv = bounds->at(step.block.row, step.block.col);
      const double clamped = iv.clamp(est);
      if (clamped != est) ++out.flow.clamped_blocks;
      est = clamped;
    }
    out.dcs.dc[idx] = est;
  }
  if (out.flow.total_blocks > 0) {
    out.flow.rate = static_cast<double>(out.flow.clamped_blocks) /
                    static_cast<double>(out.flow.total_blocks);
  }
  return out;
}

EstimateResult estimate_plane(const DcFreePlane& plane, Corner corner, double dc0, bool bounding,
                              const DcBounds* bounds, DcEstimator estimator) {
  ScanPredictor predictor(plane, corner, estimator);
  DcBounds local;
  if (bounding && bounds == nullptr) {
    local = dc_bounds(plane);
    bounds = &local;
  }
  return predictor.run(dc0, bounding, bounds);
}

}  // namespace acdc
