#include "acdc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "acdc/types.hpp"

namespace acdc {
namespace {

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void write_delta_svg(const std::string& path, const std::string& title,
                     const std::vector<double>& deltas) {
  constexpr double kWidth = 640.0, kHeight = 360.0;
  constexpr double kLeft = 64.0, kRight = 16.0, kTop = 36.0, kBottom = 40.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double lo = 0.0, hi = 0.0, mean = 0.0;
  int finite = 0;
  for (double d : deltas) {
    if (!std::isfinite(d)) continue;
    if (finite == 0) {
      lo = hi = d;
    } else {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    mean += d;
    ++finite;
  }
  if (finite > 0) mean /= finite;
  lo = std::min(lo, 0.0);
  hi = std::max(hi, 0.0);
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.08 * (hi - lo);
  lo -= pad;
  hi += pad;

  const int count = static_cast<int>(deltas.size());
  const auto x_of = [&](int i) {
    if (count <= 1) return kLeft + 0.5 * plot_w;
    return kLeft + plot_w * static_cast<double>(i) / (count - 1);
  };
  const auto y_of = [&](double v) { return kTop + plot_h * (hi - v) / (hi - lo); };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kLeft << "\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">"
      << escape_xml(title) << "</text>\n";

  // frame
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << fmt(plot_w)
      << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"#888\"/>\n";

  // y ticks
  for (int t = 0; t <= 4; ++t) {
    const double v = lo + (hi - lo) * t / 4.0;
    const double y = y_of(v);
    out << "<line x1=\"" << fmt(kLeft - 4) << "\" y1=\"" << fmt(y) << "\" x2=\"" << kLeft
        << "\" y2=\"" << fmt(y) << "\" stroke=\"#888\"/>\n";
    out << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << fmt(v, "%.4f")
        << "</text>\n";
  }
  // x labels: first and last index
  if (count > 0) {
    out << "<text x=\"" << fmt(x_of(0)) << "\" y=\"" << fmt(kHeight - 14)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">0</text>\n";
    if (count > 1) {
      out << "<text x=\"" << fmt(x_of(count - 1)) << "\" y=\"" << fmt(kHeight - 14)
          << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << count - 1
          << "</text>\n";
    }
  }
  out << "<text x=\"" << fmt(kLeft + 0.5 * plot_w) << "\" y=\"" << fmt(kHeight - 14)
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">image index"
      << "</text>\n";

  // zero reference
  out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(y_of(0.0)) << "\" x2=\""
      << fmt(kLeft + plot_w) << "\" y2=\"" << fmt(y_of(0.0)) << "\" stroke=\"#bbb\"/>\n";

  // dashed mean line
  if (finite > 0) {
    out << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(y_of(mean)) << "\" x2=\""
        << fmt(kLeft + plot_w) << "\" y2=\"" << fmt(y_of(mean))
        << "\" stroke=\"#d33\" stroke-dasharray=\"6,4\"/>\n";
    out << "<text x=\"" << fmt(kLeft + plot_w) << "\" y=\"" << fmt(y_of(mean) - 6)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" fill=\"#d33\">"
        << "mean " << fmt(mean, "%.6f") << "</text>\n";
  }

  for (int i = 0; i < count; ++i) {
    const double d = deltas[static_cast<std::size_t>(i)];
    if (!std::isfinite(d)) continue;
    out << "<circle cx=\"" << fmt(x_of(i)) << "\" cy=\"" << fmt(y_of(d))
        << "\" r=\"3\" fill=\"#36c\"/>\n";
  }
  out << "</svg>\n";
  if (!out) throw ParseError("cannot write " + path);
}

}  // namespace acdc
