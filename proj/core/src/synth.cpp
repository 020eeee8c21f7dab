#include "acdc/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace acdc {

PixelImage make_synthetic(int width, int height, std::uint32_t seed, PixelRange range) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double mid = 0.5 * (range.lo + range.hi);
  const double amp = 0.5 * range.width();

  // Smooth base: tilted ramp plus a handful of low-frequency cosines.
  const double ramp_x = (unit(rng) - 0.5) * 0.8;
  const double ramp_y = (unit(rng) - 0.5) * 0.8;
  struct Wave {
    double fx, fy, phase_x, phase_y, amp;
  };
  Wave waves[4];
  for (Wave& w : waves) {
    w.fx = 0.5 + 2.5 * unit(rng);
    w.fy = 0.5 + 2.5 * unit(rng);
    w.phase_x = 2.0 * std::numbers::pi * unit(rng);
    w.phase_y = 2.0 * std::numbers::pi * unit(rng);
    w.amp = (0.05 + 0.15 * unit(rng)) * amp;
  }

  struct Rect {
    int x0, y0, x1, y1;
    double offset;
  };
  Rect rects[3];
  for (Rect& r : rects) {
    const int x0 = static_cast<int>(unit(rng) * width * 0.7);
    const int y0 = static_cast<int>(unit(rng) * height * 0.7);
    r.x0 = x0;
    r.y0 = y0;
    r.x1 = x0 + 1 + static_cast<int>(unit(rng) * width * 0.3);
    r.y1 = y0 + 1 + static_cast<int>(unit(rng) * height * 0.3);
    r.offset = (unit(rng) - 0.5) * 0.7 * amp;
  }

  struct Ellipse {
    double cx, cy, rx, ry, offset;
  };
  Ellipse ellipses[2];
  for (Ellipse& e : ellipses) {
    e.cx = unit(rng) * width;
    e.cy = unit(rng) * height;
    e.rx = (0.05 + 0.2 * unit(rng)) * width;
    e.ry = (0.05 + 0.2 * unit(rng)) * height;
    e.offset = (unit(rng) - 0.5) * 0.6 * amp;
  }

  PixelImage image = make_image(width, height, 0, range);
  const double tau = 2.0 * std::numbers::pi;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double u = static_cast<double>(x) / width;
      const double v = static_cast<double>(y) / height;
      double val = mid + amp * (ramp_x * (u - 0.5) + ramp_y * (v - 0.5));
      for (const Wave& w : waves) {
        val += w.amp * std::cos(tau * w.fx * u + w.phase_x) * std::cos(tau * w.fy * v + w.phase_y);
      }
      for (const Rect& r : rects) {
        if (x >= r.x0 && x < r.x1 && y >= r.y0 && y < r.y1) val += r.offset;
      }
      for (const Ellipse& e : ellipses) {
        const double dx = (x - e.cx) / e.rx;
        const double dy = (y - e.cy) / e.ry;
        const double d = dx * dx + dy * dy;
        if (d < 1.0) val += e.offset * (1.0 - d);  // soft-shaded interior
      }
      const double clamped = val < range.lo ? range.lo : (val > range.hi ? range.hi : val);
      image.at(x, y) = static_cast<int>(std::lround(clamped));
    }
  }
  return image;
}

}  // namespace acdc
