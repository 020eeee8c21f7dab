#pragma once

#include <string>

#include "acdc/blockdct.hpp"
#include "acdc/types.hpp"

namespace acdc {

/// On-disk block-DCT coefficient container ("DCF1"): magic, then width,
/// height, block size and flags as 32-bit little-endian words, then one
/// 64-bit little-endian float per coefficient — blocks row-major, and
/// coefficients row-major within each block. Flag bit 0 marks a DC-stripped
/// payload (every block's (0,0) coefficient written as exactly 0.0).
struct DcfFile {
  CoefficientPlane plane;
  bool dc_stripped = false;
};

inline constexpr unsigned kDcfFlagDcStripped = 1u;

DcfFile load_dcf(const std::string& path);

void save_dcf(const std::string& path, const CoefficientPlane& plane, bool dc_stripped);

}  // namespace acdc
