#include <benchmark/benchmark.h>

#include "acdc/blockdct.hpp"
#include "acdc/frm.hpp"
#include "acdc/iqa.hpp"
#include "acdc/scan.hpp"
#include "acdc/synth.hpp"

namespace {

acdc::PixelImage test_image(int side) { return acdc::make_synthetic(side, side, 7u); }

void BM_ForwardPlane(benchmark::State& state) {
  const acdc::PixelImage image = test_image(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(acdc::forward_plane(image, 8));
  }
}
BENCHMARK(BM_ForwardPlane)->Arg(256)->Arg(512);

void BM_StripDc(benchmark::State& state) {
  const acdc::PixelImage image = test_image(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(acdc::strip_dc(image, 8));
  }
}
BENCHMARK(BM_StripDc)->Arg(256)->Arg(512);

void BM_ScanPredictorBuild(benchmark::State& state) {
  const acdc::DcFreePlane plane = acdc::strip_dc(test_image(static_cast<int>(state.range(0))), 8);
  for (auto _ : state) {
    acdc::ScanPredictor pred(plane, acdc::Corner::TopLeft);
    benchmark::DoNotOptimize(pred);
  }
}
BENCHMARK(BM_ScanPredictorBuild)->Arg(256)->Arg(512);

void BM_BoundedScan(benchmark::State& state) {
  const acdc::DcFreePlane plane = acdc::strip_dc(test_image(static_cast<int>(state.range(0))), 8);
  const acdc::DcBounds bounds = acdc::dc_bounds(plane);
  const acdc::ScanPredictor pred(plane, acdc::Corner::TopLeft);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pred.run(1000.0, true, &bounds));
  }
}
BENCHMARK(BM_BoundedScan)->Arg(256)->Arg(512);

void BM_SearchBracket(benchmark::State& state) {
  const acdc::DcFreePlane plane = acdc::strip_dc(test_image(static_cast<int>(state.range(0))), 8);
  acdc::SearchConfig cfg;
  cfg.mode = acdc::SearchMode::Bracket;
  for (auto _ : state) {
    benchmark::DoNotOptimize(acdc::search_bracket(plane, acdc::Corner::TopLeft, cfg));
  }
}
BENCHMARK(BM_SearchBracket)->Arg(256)->Arg(512);

void BM_Ssim(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const acdc::PixelImage a = test_image(side);
  const acdc::PixelImage b = acdc::make_synthetic(side, side, 8u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(acdc::ssim(a, b));
  }
}
BENCHMARK(BM_Ssim)->Arg(256)->Arg(512);

void BM_MsSsim(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const acdc::PixelImage a = test_image(side);
  const acdc::PixelImage b = acdc::make_synthetic(side, side, 8u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(acdc::ms_ssim(a, b));
  }
}
BENCHMARK(BM_MsSsim)->Arg(256)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
