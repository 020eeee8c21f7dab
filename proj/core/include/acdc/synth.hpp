#pragma once

#include <cstdint>

#include "acdc/types.hpp"

namespace acdc {

/// Deterministic piecewise-smooth test image: a low-frequency cosine mixture
/// over a diagonal ramp, overlaid with a few constant-offset rectangles and
/// soft ellipses, clamped into the pixel range. Same seed, same image.
PixelImage make_synthetic(int width, int height, std::uint32_t seed, PixelRange range = {});

}  // namespace acdc
