#pragma once

#include <string>
#include <vector>

namespace acdc {

/// Writes a self-contained scatter chart of per-image score deltas: image
/// index on x, delta on y, a dashed horizontal line at the mean of the
/// finite deltas, and a solid reference line at zero. Non-finite deltas are
/// left out of the drawing but keep their index slot.
void write_delta_svg(const std::string& path, const std::string& title,
                     const std::vector<double>& deltas);

}  // namespace acdc
