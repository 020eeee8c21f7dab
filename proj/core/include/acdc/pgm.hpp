#pragma once

#include <string>

#include "acdc/types.hpp"

namespace acdc {

/// Loads a binary PGM (P5, maxval 255). Header comments are accepted; the
/// ASCII P2 variant and other maxvals are rejected as unsupported.
PixelImage load_pgm(const std::string& path);

/// Writes the canonical form: "P5\n<w> <h>\n255\n" + raw samples. Pixel
/// values are clamped into [0, 255] bytes.
void save_pgm(const std::string& path, const PixelImage& image);

}  // namespace acdc
