#pragma once

#include "acdc/types.hpp"

namespace acdc {

struct QualityReport {
  double psnr = 0.0;     // decibels, +infinity for identical inputs
  double ssim = 0.0;
  double ms_ssim = 0.0;
};

/// 10*log10(L^2 / MSE) with L the pixel-range width; +infinity when MSE = 0.
double psnr(const PixelImage& ref, const PixelImage& test);

/// Mean local SSIM over valid 11x11 window positions (Gaussian window,
/// sigma 1.5, K1 = 0.01, K2 = 0.03). Throws TooSmallError below 11x11.
double ssim(const PixelImage& ref, const PixelImage& test);

/// Five-scale MS-SSIM: contrast/structure at every scale, luminance at the
/// coarsest, weights (0.0448, 0.2856, 0.3001, 0.2363, 0.1333), dyadic 2x2
/// mean downsampling. Needs at least 176 pixels per axis.
double ms_ssim(const PixelImage& ref, const PixelImage& test);

/// All three metrics at once.
QualityReport score(const PixelImage& ref, const PixelImage& test);

}  // namespace acdc
