#include "acdc/frm.hpp"

#include <algorithm>
#include <cmath>

namespace acdc {
namespace {

void check_config(const SearchConfig& cfg) {
  if (!(cfg.delta > 0.0)) throw Error("search: delta must be positive");
}

Interval corner_interval(const DcBounds& bounds, Corner corner) {
  const BlockRef b = corner_block(corner, bounds.grid);
  const Interval iv = bounds.at(b.row, b.col);
  if (iv.hi < iv.lo) throw EmptyRangeError("search: corner block has an empty valid DC range");
  return iv;
}

double rate_at(const ScanPredictor& pred, const DcBounds& bounds, double dc0) {
  return pred.run(dc0, true, &bounds).flow.rate;
}

// Midpoint-of-ties rule over every recorded evaluation.
void select_chosen(SearchTrace& trace) {
  double best = trace.evals.front().rate;
  for (const SearchEval& e : trace.evals) best = std::min(best, e.rate);
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const SearchEval& e : trace.evals) {
    if (e.rate != best) continue;
    if (first || e.dc0 < lo) lo = e.dc0;
    if (first || e.dc0 > hi) hi = e.dc0;
    first = false;
  }
  trace.best_rate = best;
  trace.tie_lo = lo;
  trace.tie_hi = hi;
  trace.chosen = 0.5 * (lo + hi);
}

void check_range(double lo, double hi, double delta) {
  if (!(delta > 0.0)) throw Error("search: delta must be positive");
  if (hi < lo) throw EmptyRangeError("search: empty candidate range");
}

}  // namespace

SearchTrace minimize_grid(double lo, double hi, double delta,
                          const std::function<double(double)>& fn) {
  check_range(lo, hi, delta);
  SearchTrace trace;
  for (int k = 0;; ++k) {
    const double x = lo + static_cast<double>(k) * delta;
    if (x >= hi) break;
    trace.evals.push_back({x, fn(x)});
  }
  if (trace.evals.empty() || trace.evals.back().dc0 < hi) {
    trace.evals.push_back({hi, fn(hi)});
  }
  select_chosen(trace);
  return trace;
}

SearchTrace minimize_bracket(double lo, double hi, double delta,
                             const std::function<double(double)>& fn) {
  check_range(lo, hi, delta);
  SearchTrace trace;
  double f_lo = fn(lo);
  trace.evals.push_back({lo, f_lo});
  if (hi > lo) {
    double f_hi = fn(hi);
    trace.evals.push_back({hi, f_hi});
    // Keeping the half whose endpoint rates are the two smallest reduces to
    // comparing the outer rates: the midpoint belongs to both halves.
    while (hi - lo > delta) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = fn(mid);
      trace.evals.push_back({mid, f_mid});
      if (f_lo <= f_hi) {
        hi = mid;
        f_hi = f_mid;
      } else {
        lo = mid;
        f_lo = f_mid;
      }
    }
  }
  select_chosen(trace);
  return trace;
}

double flow_rate(const DcFreePlane& plane, Corner corner, double dc0, const DcBounds& bounds,
                 DcEstimator estimator) {
  ScanPredictor pred(plane, corner, estimator);
  return rate_at(pred, bounds, dc0);
}

SearchTrace search_exhaustive(const DcFreePlane& plane, Corner corner, const SearchConfig& cfg) {
  check_config(cfg);
  const DcBounds bounds = dc_bounds(plane);
  const Interval iv = corner_interval(bounds, corner);
  const ScanPredictor pred(plane, corner, cfg.estimator);
  return minimize_grid(iv.lo, iv.hi, cfg.delta,
                       [&](double dc0) { return rate_at(pred, bounds, dc0); });
}

SearchTrace search_bracket(const DcFreePlane& plane, Corner corner, const SearchConfig& cfg) {
  check_config(cfg);
  const DcBounds bounds = dc_bounds(plane);
  const Interval iv = corner_interval(bounds, corner);
  const ScanPredictor pred(plane, corner, cfg.estimator);
  return minimize_bracket(iv.lo, iv.hi, cfg.delta,
                          [&](double dc0) { return rate_at(pred, bounds, dc0); });
}

FrmResult recover_frm_traced(const DcFreePlane& plane, const SearchConfig& cfg) {
  check_config(cfg);
  if (cfg.corners.empty()) throw Error("recover_frm: no corners configured");
  const DcBounds bounds = dc_bounds(plane);

  FrmResult out;
  Raster sum(plane.data.width(), plane.data.height(), 0.0);
  for (Corner corner : cfg.corners) {
    const Interval iv = corner_interval(bounds, corner);
    const ScanPredictor pred(plane, corner, cfg.estimator);
    const auto fn = [&](double dc0) { return rate_at(pred, bounds, dc0); };
    SearchTrace trace = cfg.mode == SearchMode::Exhaustive
                            ? minimize_grid(iv.lo, iv.hi, cfg.delta, fn)
                            : minimize_bracket(iv.lo, iv.hi, cfg.delta, fn);

    EstimateResult final_scan = pred.run(trace.chosen, true, &bounds);
    Raster image = apply_dc(plane, final_scan.dcs);
    auto src = image.values();
    auto dst = sum.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] += src[i];
    out.corners.push_back({corner, std::move(trace), final_scan.flow, std::move(image)});
  }

  const double inv = 1.0 / static_cast<double>(cfg.corners.size());
  for (double& v : sum.values()) v *= inv;
  out.averaged = std::move(sum);
  out.image = finalize(out.averaged, plane.range);
  return out;
}

PixelImage recover_frm(const DcFreePlane& plane, const SearchConfig& cfg) {
  return recover_frm_traced(plane, cfg).image;
}

}  // namespace acdc
