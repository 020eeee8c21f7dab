#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "acdc/blockdct.hpp"
#include "acdc/frm.hpp"
#include "acdc/synth.hpp"
#include "acdc/types.hpp"
#include "acdc/uso.hpp"
#include "test_support.hpp"

using namespace acdc;
using namespace testutil;

namespace {

DcFreePlane constant_plane(int w, int h, int value) {
  return strip_dc(make_image(w, h, value), 8);
}

int bracket_budget(double width, double delta) {
  if (width <= delta) return 3;
  return 2 * static_cast<int>(std::ceil(std::log2(width / delta))) + 3;
}

}  // namespace

TEST_CASE("flow_rate: constant image is flat at zero inside the interval") {
  const DcFreePlane plane = constant_plane(32, 32, 100);
  const DcBounds bounds = dc_bounds(plane);
  for (double dc0 : {0.0, 512.3, 1020.0, 2040.0}) {
    CHECK(flow_rate(plane, Corner::TopLeft, dc0, bounds) == 0.0);
  }
  // Outside the valid range only the corner block's estimate is altered by
  // the projection; the propagated boundary-exact estimates are not.
  CHECK(flow_rate(plane, Corner::TopLeft, 3000.0, bounds) == 1.0 / 16.0);
  CHECK(flow_rate(plane, Corner::TopLeft, -50.0, bounds) == 1.0 / 16.0);
}

TEST_CASE("minimize_grid: candidate layout and count") {
  int calls = 0;
  const auto fn = [&](double) {
    ++calls;
    return 1.0;
  };
  const SearchTrace t = minimize_grid(0.0, 10.0, 3.0, fn);
  REQUIRE(t.evals.size() == 5);
  CHECK(t.evals[0].dc0 == 0.0);
  CHECK(t.evals[1].dc0 == 3.0);
  CHECK(t.evals[2].dc0 == 6.0);
  CHECK(t.evals[3].dc0 == 9.0);
  CHECK(t.evals[4].dc0 == 10.0);
  CHECK(calls == 5);
  // ceil(width / delta) + 1 on an exact multiple
  CHECK(minimize_grid(0.0, 9.0, 3.0, fn).evals.size() == 4);
  // degenerate zero-width interval: the single feasible point
  const SearchTrace single = minimize_grid(5.0, 5.0, 1.0, fn);
  REQUIRE(single.evals.size() == 1);
  CHECK(single.chosen == 5.0);
}

TEST_CASE("minimize_grid: midpoint-of-ties selection") {
  const auto fn = [](double x) { return (x >= 3.0 && x <= 7.0) ? 0.0 : 1.0; };
  const SearchTrace t = minimize_grid(0.0, 10.0, 1.0, fn);
  CHECK(t.best_rate == 0.0);
  CHECK(t.tie_lo == 3.0);
  CHECK(t.tie_hi == 7.0);
  CHECK(t.chosen == 5.0);

  const auto unique_min = [](double x) { return std::abs(x - 4.0); };
  CHECK(minimize_grid(0.0, 10.0, 1.0, unique_min).chosen == 4.0);
}

TEST_CASE("minimize_grid/minimize_bracket: argument validation") {
  const auto fn = [](double) { return 0.0; };
  CHECK_THROWS_AS(minimize_grid(0.0, 1.0, 0.0, fn), Error);
  CHECK_THROWS_AS(minimize_grid(0.0, 1.0, -2.0, fn), Error);
  CHECK_THROWS_AS(minimize_grid(1.0, 0.0, 1.0, fn), EmptyRangeError);
  CHECK_THROWS_AS(minimize_bracket(1.0, 0.0, 1.0, fn), EmptyRangeError);
}

TEST_CASE("minimize_bracket: converges on an exactly unimodal curve") {
  const auto fn = [](double x) {
    return std::floor(std::abs(x - 700.0)) / 2040.0;  // quantized V around 700
  };
  const SearchTrace t = minimize_bracket(0.0, 2040.0, 1.0, fn);
  CHECK(std::abs(t.chosen - 700.0) <= 1.0);
  CHECK(t.evaluations() <= bracket_budget(2040.0, 1.0));
  // 2 endpoints + one midpoint per halving
  CHECK(t.evaluations() == 2 + static_cast<int>(std::ceil(std::log2(2040.0))));
}

TEST_CASE("minimize_bracket: flat curve terminates at the midpoint") {
  const auto fn = [](double) { return 0.0; };
  const SearchTrace t = minimize_bracket(0.0, 2040.0, 1.0, fn);
  CHECK(t.chosen == 1020.0);
  CHECK(t.tie_lo == 0.0);
  CHECK(t.tie_hi == 2040.0);
}

TEST_CASE("minimize_bracket: ties keep the left sub-interval") {
  // f is 0 on [0, 4] and rises to the right; the first probe triple
  // (0, 500, 1000) ties at f(0) = f(500)... not quite: craft a step curve
  // where the outer rates tie so the left half must be kept.
  std::vector<double> probes;
  const auto fn = [&](double x) {
    probes.push_back(x);
    return x <= 500.0 ? 1.0 : 2.0;
  };
  const SearchTrace t = minimize_bracket(0.0, 1000.0, 250.0, fn);
  REQUIRE(probes.size() >= 3);
  CHECK(probes[0] == 0.0);
  CHECK(probes[1] == 1000.0);
  CHECK(probes[2] == 500.0);
  // f(0)=1 <= f(1000)=2 keeps [0, 500]; probes stay in the left half.
  for (std::size_t i = 3; i < probes.size(); ++i) CHECK(probes[i] <= 500.0);
  CHECK(t.best_rate == 1.0);
  CHECK(t.chosen == doctest::Approx(250.0));  // midpoint of ties {0...500}
}

TEST_CASE("search_exhaustive: constant image ties across the whole interval") {
  const DcFreePlane plane = constant_plane(32, 32, 64);
  SearchConfig cfg;
  cfg.delta = 1.0;
  const SearchTrace t = search_exhaustive(plane, Corner::TopLeft, cfg);
  CHECK(t.best_rate == 0.0);
  CHECK(t.tie_lo == 0.0);
  CHECK(t.tie_hi == 2040.0);
  CHECK(t.chosen == 1020.0);
  CHECK(t.evals.size() == 2041);
}

TEST_CASE("search_bracket: constant image terminates at 1020") {
  const DcFreePlane plane = constant_plane(32, 32, 64);
  SearchConfig cfg;
  cfg.mode = SearchMode::Bracket;
  const SearchTrace t = search_bracket(plane, Corner::TopLeft, cfg);
  CHECK(t.chosen == 1020.0);
  CHECK(t.evaluations() <= bracket_budget(2040.0, 1.0));
}

TEST_CASE("search_exhaustive: chosen equals the independent dense sweep argmin") {
  const PixelImage img = make_synthetic(64, 64, 9);
  const DcFreePlane plane = strip_dc(img, 8);
  const DcBounds bounds = dc_bounds(plane);
  SearchConfig cfg;
  cfg.delta = 4.0;

  for (Corner corner : {Corner::TopLeft, Corner::BottomRight}) {
    const SearchTrace t = search_exhaustive(plane, corner, cfg);

    const BlockRef cb = corner_block(corner, plane.grid);
    const Interval iv = bounds.at(cb.row, cb.col);
    double best = 2.0, lo = 0.0, hi = 0.0;
    bool first = true;
    std::vector<double> candidates;
    for (int k = 0;; ++k) {
      const double x = iv.lo + static_cast<double>(k) * cfg.delta;
      if (x >= iv.hi) break;
      candidates.push_back(x);
    }
    candidates.push_back(iv.hi);
    for (double x : candidates) {
      const double rate = flow_rate(plane, corner, x, bounds);
      if (rate < best) {
        best = rate;
        first = true;
      }
      if (rate == best) {
        if (first || x < lo) lo = x;
        if (first || x > hi) hi = x;
        first = false;
      }
    }
    CHECK(t.best_rate == best);
    CHECK(std::abs(t.chosen - 0.5 * (lo + hi)) <= cfg.delta);
    // argmin correctness: no evaluated candidate beats the reported best
    for (const SearchEval& e : t.evals) CHECK(e.rate >= t.best_rate);
  }
}

TEST_CASE("search traces stay within the candidate interval") {
  const PixelImage img = make_synthetic(48, 40, 20);
  const DcFreePlane plane = strip_dc(img, 8);
  const DcBounds bounds = dc_bounds(plane);
  SearchConfig cfg;
  cfg.delta = 16.0;
  for (Corner corner : kAllCorners) {
    const BlockRef cb = corner_block(corner, plane.grid);
    const Interval iv = bounds.at(cb.row, cb.col);
    for (SearchMode mode : {SearchMode::Exhaustive, SearchMode::Bracket}) {
      cfg.mode = mode;
      const SearchTrace t = mode == SearchMode::Exhaustive
                                ? search_exhaustive(plane, corner, cfg)
                                : search_bracket(plane, corner, cfg);
      CHECK(t.chosen >= iv.lo);
      CHECK(t.chosen <= iv.hi);
      for (const SearchEval& e : t.evals) {
        CHECK(e.dc0 >= iv.lo);
        CHECK(e.dc0 <= iv.hi);
        CHECK(e.rate >= 0.0);
        CHECK(e.rate <= 1.0);
      }
      if (mode == SearchMode::Bracket) {
        CHECK(t.evaluations() <= bracket_budget(iv.width(), cfg.delta));
      }
    }
  }
}

TEST_CASE("search: empty corner interval raises EmptyRangeError") {
  // A DC-free spread wider than the pixel range makes Eq.-(1) empty. Such a
  // plane cannot come from a real 8-bit image, so craft it directly.
  DcFreePlane plane{make_grid(16, 8, 8), Raster(16, 8, 0.0), {}};
  plane.data.at(0, 0) = -200.0;
  plane.data.at(1, 0) = 200.0;
  SearchConfig cfg;
  CHECK_THROWS_AS(search_exhaustive(plane, Corner::TopLeft, cfg), EmptyRangeError);
  CHECK_THROWS_AS(search_bracket(plane, Corner::TopLeft, cfg), EmptyRangeError);
  CHECK_THROWS_AS(recover_frm(plane, cfg), EmptyRangeError);
  // The unaffected opposite corner is still searchable.
  CHECK_NOTHROW(search_exhaustive(plane, Corner::TopRight, cfg));
}

TEST_CASE("search: non-positive delta is rejected") {
  const DcFreePlane plane = constant_plane(16, 16, 10);
  SearchConfig cfg;
  cfg.delta = 0.0;
  CHECK_THROWS_AS(search_exhaustive(plane, Corner::TopLeft, cfg), Error);
  CHECK_THROWS_AS(recover_frm(plane, cfg), Error);
}

TEST_CASE("recover_frm: constant image comes back flat at 128") {
  const DcFreePlane plane = constant_plane(40, 24, 77);
  const PixelImage out = recover_frm(plane);
  for (int p : out.pixels) CHECK(p == 128);
}

TEST_CASE("recover_frm: per-corner reconstructions honor the range guarantee") {
  for (std::uint32_t seed : {1u, 14u}) {
    const PixelImage img = make_synthetic(64, 64, seed);
    const DcFreePlane plane = strip_dc(img, 8);
    const FrmResult result = recover_frm_traced(plane);
    REQUIRE(result.corners.size() == 4);
    for (const CornerRecovery& corner : result.corners) {
      CHECK(min_value(corner.image) >= -1e-6);
      CHECK(max_value(corner.image) <= 255.0 + 1e-6);
      CHECK(corner.flow.total_blocks == plane.grid.blocks());
      CHECK(corner.trace.best_rate >= 0.0);
      CHECK(corner.trace.best_rate <= 1.0);
    }
    CHECK(min_value(result.averaged) >= -1e-6);
    CHECK(max_value(result.averaged) <= 255.0 + 1e-6);
  }
}

TEST_CASE("recover_frm: no global post-scaling is applied") {
  // The averaged plane already sits inside the range, so finalize is the
  // only step between it and the output: every output pixel equals its
  // averaged value rounded half away from zero.
  const PixelImage img = make_synthetic(48, 48, 30);
  const DcFreePlane plane = strip_dc(img, 8);
  const FrmResult result = recover_frm_traced(plane);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const double v = result.averaged.at(x, y);
      const double rounded = std::copysign(std::floor(std::abs(v) + 0.5), v);
      const double clamped = std::min(255.0, std::max(0.0, rounded));
      CHECK(result.image.at(x, y) == static_cast<int>(clamped));
    }
  }
}

TEST_CASE("recover_frm honors the configured corner subset") {
  const PixelImage img = make_synthetic(32, 32, 2);
  const DcFreePlane plane = strip_dc(img, 8);
  SearchConfig cfg;
  cfg.corners = {Corner::TopLeft};
  const FrmResult result = recover_frm_traced(plane, cfg);
  REQUIRE(result.corners.size() == 1);
  CHECK(result.corners[0].corner == Corner::TopLeft);
  // Single corner: averaged equals that corner's reconstruction.
  CHECK(max_abs_diff(result.averaged.values(), result.corners[0].image.values()) == 0.0);
}

TEST_CASE("recover_frm is deterministic, traces included") {
  const PixelImage img = make_synthetic(56, 40, 44);
  const DcFreePlane plane = strip_dc(img, 8);
  SearchConfig cfg;
  cfg.mode = SearchMode::Bracket;
  const FrmResult a = recover_frm_traced(plane, cfg);
  const FrmResult b = recover_frm_traced(plane, cfg);
  CHECK(a.image.pixels == b.image.pixels);
  REQUIRE(a.corners.size() == b.corners.size());
  for (std::size_t k = 0; k < a.corners.size(); ++k) {
    CHECK(a.corners[k].trace.chosen == b.corners[k].trace.chosen);
    CHECK(a.corners[k].trace.evals.size() == b.corners[k].trace.evals.size());
  }
}

TEST_CASE("frm vs uso: bounded scans stay in range where unbounded may not") {
  const PixelImage img = make_synthetic(96, 80, 5);
  const DcFreePlane plane = strip_dc(img, 8);

  const FrmResult frm = recover_frm_traced(plane);
  for (const CornerRecovery& corner : frm.corners) {
    CHECK(min_value(corner.image) >= -1e-6);
    CHECK(max_value(corner.image) <= 255.0 + 1e-6);
  }

  // USO's intermediate scans carry no bounding; their raw ranges are
  // reported for diagnostics and are allowed to spill outside the range.
  const UsoResult uso = recover_uso_traced(plane);
  for (const CornerScan& scan : uso.corners) {
    CHECK(scan.raw_range.lo <= scan.raw_range.hi);
  }
}
