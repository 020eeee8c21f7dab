#pragma once

#include <array>
#include <vector>

#include "acdc/blockdct.hpp"
#include "acdc/types.hpp"

namespace acdc {

/// Initial reference block of a scan.
enum class Corner { TopLeft, TopRight, BottomLeft, BottomRight };

inline constexpr std::array<Corner, 4> kAllCorners = {
    Corner::TopLeft, Corner::TopRight, Corner::BottomLeft, Corner::BottomRight};

const char* corner_name(Corner corner);

/// Cross-boundary pixel pairing used to predict the DC offset between two
/// adjacent blocks: straight across, or shifted by +/-1 along the boundary.
enum class Pattern { Straight, DiagonalDown, DiagonalUp };

/// Position of the reference block relative to the target block.
enum class Side { Left, Right, Top, Bottom };

/// How the per-pattern paired differences are reduced to one DC estimate.
enum class DcEstimator { Mean, Median };

struct BlockRef {
  int row = 0;
  int col = 0;
  bool operator==(const BlockRef&) const = default;
};

BlockRef corner_block(Corner corner, const BlockGrid& grid);

struct ScanStep {
  BlockRef block;
  std::array<BlockRef, 2> preds{};
  int pred_count = 0;
};

/// Corner-to-opposite-corner traversal of the block grid. Every non-initial
/// block lists its already-visited horizontal and/or vertical neighbor.
std::vector<ScanStep> scan_order(Corner corner, const BlockGrid& grid);

/// Count and rate of blocks whose DC estimate had to be projected onto its
/// valid interval during a bounded scan.
struct FlowStats {
  int clamped_blocks = 0;
  int total_blocks = 0;
  double rate = 0.0;
};

/// Read-only view of one n x n block inside a raster.
struct ConstBlockView {
  const double* top_left = nullptr;
  int stride = 0;
  int n = 0;

  double at(int y, int x) const { return top_left[static_cast<std::size_t>(y) * stride + x]; }
};

ConstBlockView block_view(const Raster& raster, const BlockGrid& grid, int block_row, int block_col);

struct Prediction {
  double dc = 0.0;
  Pattern pattern = Pattern::Straight;
  std::array<double, 3> scores{};  // per-pattern variance, indexed by Pattern
};

/// Predicts the DC coefficient of a DC-free target block from an adjacent
/// reference block whose pixels already carry their DC. The smoothest of the
/// three boundary patterns (smallest variance of paired differences, a score
/// unaffected by the target's unknown DC) supplies the estimate.
Prediction predict_dc(const ConstBlockView& ref, const ConstBlockView& target, Side side,
                      DcEstimator estimator = DcEstimator::Mean);

struct EstimateResult {
  DcPlane dcs;
  FlowStats flow;
};

/// One corner scan over a fixed DC-free plane, reusable across many dc0
/// values. Pattern selection and the per-edge base offsets depend only on
/// the plane, so they are computed once; each run() is then a linear pass
/// that propagates dc0, averages predecessor estimates and, when bounding,
/// projects each block's DC onto its valid interval.
class ScanPredictor {
 public:
  ScanPredictor(const DcFreePlane& plane, Corner corner,
                DcEstimator estimator = DcEstimator::Mean);

  EstimateResult run(double dc0, bool bounding = false, const DcBounds* bounds = nullptr) const;

  Corner corner() const { return corner_; }
  const BlockGrid& grid() const { return grid_; }

 private:
  Corner corner_;
  BlockGrid grid_;
  std::vector<ScanStep> order_;
  std::vector<double> offset_h_;  // base DC offset from the horizontal predecessor
  std::vector<double> offset_v_;  // base DC offset from the vertical predecessor
};

/// Scans the plane from the given corner with DC(corner) = dc0. With
/// bounding on, every estimate (the corner's included) is clamped into its
/// block's valid interval and the clamped blocks are counted.
EstimateResult estimate_plane(const DcFreePlane& plane, Corner corner, double dc0,
                              bool bounding = false, const DcBounds* bounds = nullptr,
                              DcEstimator estimator = DcEstimator::Mean);

}  // namespace acdc
