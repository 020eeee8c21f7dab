#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "acdc/blockdct.hpp"
#include "acdc/scan.hpp"
#include "acdc/types.hpp"

namespace acdc {

enum class SearchMode { Exhaustive, Bracket };

struct SearchConfig {
  double delta = 1.0;  // DC-unit step size; > 0
  SearchMode mode = SearchMode::Exhaustive;
  std::vector<Corner> corners{kAllCorners.begin(), kAllCorners.end()};
  DcEstimator estimator = DcEstimator::Mean;
};

/// One flow-rate evaluation at a candidate dc0.
struct SearchEval {
  double dc0 = 0.0;
  double rate = 0.0;
};

struct SearchTrace {
  std::vector<SearchEval> evals;  // in evaluation order
  double chosen = 0.0;            // midpoint of leftmost/rightmost minimizers
  double tie_lo = 0.0;            // leftmost evaluated minimizer
  double tie_hi = 0.0;            // rightmost evaluated minimizer
  double best_rate = 0.0;         // minimal evaluated flow rate

  int evaluations() const { return static_cast<int>(evals.size()); }
};

/// Fraction of blocks whose DC estimate needs projection onto its valid
/// interval when scanning from `corner` with DC(B0) = dc0.
double flow_rate(const DcFreePlane& plane, Corner corner, double dc0, const DcBounds& bounds,
                 DcEstimator estimator = DcEstimator::Mean);

/// Minimizes fn over the grid {lo, lo+delta, ...} U {hi}; the chosen point is
/// the midpoint of the leftmost and rightmost global minimizers. Throws
/// EmptyRangeError when hi < lo.
SearchTrace minimize_grid(double lo, double hi, double delta,
                          const std::function<double(double)>& fn);

/// Three-point bracket minimizer: evaluates both endpoints, then repeatedly
/// evaluates the midpoint and keeps the half bounded by the two smallest
/// rates (ties keep the left half) until the interval width is <= delta.
/// Selection among all evaluated points follows the same midpoint-of-ties
/// rule as minimize_grid. At most 2*ceil(log2((hi-lo)/delta)) + 3
/// evaluations. Exact only for unimodal fn; see search_bracket.
SearchTrace minimize_bracket(double lo, double hi, double delta,
                             const std::function<double(double)>& fn);

/// Evaluates the flow rate on the grid {lo, lo+delta, ...} U {hi} over the
/// corner block's valid DC interval. Chosen dc0 is the midpoint of the
/// leftmost and rightmost global minimizers.
SearchTrace search_exhaustive(const DcFreePlane& plane, Corner corner, const SearchConfig& cfg);

/// Three-point bracket search: evaluates {left, mid, right}, keeps the
/// sub-interval bounded by the two smallest rates (ties keep the left), and
/// halves until the interval width is <= delta. The midpoint-of-ties rule
/// is then applied among all evaluated points. At most
/// 2*ceil(log2(width/delta)) + 3 evaluations.
SearchTrace search_bracket(const DcFreePlane& plane, Corner corner, const SearchConfig& cfg);

struct CornerRecovery {
  Corner corner = Corner::TopLeft;
  SearchTrace trace;
  FlowStats flow;  // of the final bounded scan at trace.chosen
  Raster image;    // bounded real-valued reconstruction, pre-averaging
};

struct FrmResult {
  PixelImage image;
  Raster averaged;  // average of the per-corner bounded reconstructions
  std::vector<CornerRecovery> corners;
};

/// Improved recovery: per corner, search for the dc0 minimizing the flow
/// rate, rescan with bounding at the chosen dc0, and average the resulting
/// images. In-scan bounding keeps every intermediate pixel in range, so no
/// global adjustment or post-scaling is needed before rounding.
FrmResult recover_frm_traced(const DcFreePlane& plane, const SearchConfig& cfg = {});

PixelImage recover_frm(const DcFreePlane& plane, const SearchConfig& cfg = {});

}  // namespace acdc
