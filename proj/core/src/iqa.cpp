#include "acdc/iqa.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace acdc {
namespace {

constexpr int kWin = 11;
constexpr double kSigma = 1.5;
constexpr double kK1 = 0.01;
constexpr double kK2 = 0.03;
constexpr int kScales = 5;
constexpr std::array<double, kScales> kWeights = {0.0448, 0.2856, 0.3001, 0.2363, 0.1333};

struct Buf {
  int w = 0;
  int h = 0;
  std::vector<double> v;

  double at(std::size_t i) const { return v[i]; }
};

Buf to_buf(const PixelImage& img) {
  Buf b{img.width, img.height, {}};
  b.v.assign(img.pixels.begin(), img.pixels.end());
  return b;
}

std::array<double, kWin> gaussian_kernel() {
  std::array<double, kWin> k{};
  const int c = kWin / 2;
  double sum = 0.0;
  for (int i = 0; i < kWin; ++i) {
    const double d = i - c;
    k[static_cast<std::size_t>(i)] = std::exp(-(d * d) / (2.0 * kSigma * kSigma));
    sum += k[static_cast<std::size_t>(i)];
  }
  for (double& x : k) x /= sum;
  return k;
}

// Separable valid-mode convolution with the normalized Gaussian window:
// output is (w - kWin + 1) x (h - kWin + 1).
Buf filter_valid(const Buf& in, const std::array<double, kWin>& k) {
  const int ow = in.w - kWin + 1;
  Buf mid{ow, in.h, std::vector<double>(static_cast<std::size_t>(ow) * in.h)};
  for (int y = 0; y < in.h; ++y) {
    const double* row = in.v.data() + static_cast<std::size_t>(y) * in.w;
    double* out = mid.v.data() + static_cast<std::size_t>(y) * ow;
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int i = 0; i < kWin; ++i) acc += k[static_cast<std::size_t>(i)] * row[x + i];
      out[x] = acc;
    }
  }
  const int oh = in.h - kWin + 1;
  Buf out{ow, oh, std::vector<double>(static_cast<std::size_t>(ow) * oh)};
  for (int y = 0; y < oh; ++y) {
    double* dst = out.v.data() + static_cast<std::size_t>(y) * ow;
    for (int i = 0; i < kWin; ++i) {
      const double ki = k[static_cast<std::size_t>(i)];
      const double* src = mid.v.data() + static_cast<std::size_t>(y + i) * ow;
      for (int x = 0; x < ow; ++x) dst[x] += ki * src[x];
    }
  }
  return out;
}

Buf multiply(const Buf& a, const Buf& b) {
  Buf out{a.w, a.h, std::vector<double>(a.v.size())};
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i] * b.v[i];
  return out;
}

// Mean SSIM and mean contrast/structure term over valid window positions.
void ssim_components(const Buf& x, const Buf& y, double range_width, double& mean_ssim,
                     double& mean_cs) {
  const double c1 = (kK1 * range_width) * (kK1 * range_width);
  const double c2 = (kK2 * range_width) * (kK2 * range_width);
  const auto k = gaussian_kernel();

  const Buf mu_x = filter_valid(x, k);
  const Buf mu_y = filter_valid(y, k);
  const Buf xx = filter_valid(multiply(x, x), k);
  const Buf yy = filter_valid(multiply(y, y), k);
  const Buf xy = filter_valid(multiply(x, y), k);

  double ssim_acc = 0.0;
  double cs_acc = 0.0;
  for (std::size_t i = 0; i < mu_x.v.size(); ++i) {
    const double mx = mu_x.v[i];
    const double my = mu_y.v[i];
    const double var_x = xx.v[i] - mx * mx;
    const double var_y = yy.v[i] - my * my;
    const double cov = xy.v[i] - mx * my;
    const double cs = (2.0 * cov + c2) / (var_x + var_y + c2);
    const double lum = (2.0 * mx * my + c1) / (mx * mx + my * my + c1);
    ssim_acc += lum * cs;
    cs_acc += cs;
  }
  const double count = static_cast<double>(mu_x.v.size());
  mean_ssim = ssim_acc / count;
  mean_cs = cs_acc / count;
}

// 2x2 box mean, odd trailing row/column dropped.
Buf downsample2(const Buf& in) {
  const int ow = in.w / 2;
  const int oh = in.h / 2;
  Buf out{ow, oh, std::vector<double>(static_cast<std::size_t>(ow) * oh)};
  for (int y = 0; y < oh; ++y) {
    const double* r0 = in.v.data() + static_cast<std::size_t>(2 * y) * in.w;
    const double* r1 = r0 + in.w;
    double* dst = out.v.data() + static_cast<std::size_t>(y) * ow;
    for (int x = 0; x < ow; ++x) {
      dst[x] = 0.25 * (r0[2 * x] + r0[2 * x + 1] + r1[2 * x] + r1[2 * x + 1]);
    }
  }
  return out;
}

void check_dims(const PixelImage& ref, const PixelImage& test) {
  if (ref.width != test.width || ref.height != test.height) {
    throw DimensionError("iqa: image dimensions differ");
  }
}

}  // namespace

double psnr(const PixelImage& ref, const PixelImage& test) {
  check_dims(ref, test);
  double acc = 0.0;
  for (std::size_t i = 0; i < ref.pixels.size(); ++i) {
    const double d = static_cast<double>(ref.pixels[i]) - test.pixels[i];
    acc += d * d;
  }
  const double mse = acc / static_cast<double>(ref.pixels.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  const double range_width = ref.range.width();
  return 10.0 * std::log10(range_width * range_width / mse);
}

double ssim(const PixelImage& ref, const PixelImage& test) {
  check_dims(ref, test);
  if (ref.width < kWin || ref.height < kWin) {
    throw TooSmallError("ssim: image smaller than the 11x11 window");
  }
  double mean_ssim = 0.0, mean_cs = 0.0;
  ssim_components(to_buf(ref), to_buf(test), ref.range.width(), mean_ssim, mean_cs);
  return mean_ssim;
}

double ms_ssim(const PixelImage& ref, const PixelImage& test) {
  check_dims(ref, test);
  const int min_side = kWin << (kScales - 1);  // 176: window survives 4 halvings
  if (ref.width < min_side || ref.height < min_side) {
    throw TooSmallError("ms_ssim: need at least 176 pixels per axis");
  }

  Buf x = to_buf(ref);
  Buf y = to_buf(test);
  const double range_width = ref.range.width();
  double product = 1.0;
  for (int scale = 0; scale < kScales; ++scale) {
    double mean_ssim = 0.0, mean_cs = 0.0;
    ssim_components(x, y, range_width, mean_ssim, mean_cs);
    const double term = scale + 1 < kScales ? mean_cs : mean_ssim;
    product *= std::pow(term, kWeights[static_cast<std::size_t>(scale)]);
    if (scale + 1 < kScales) {
      x = downsample2(x);
      y = downsample2(y);
    }
  }
  return product;
}

QualityReport score(const PixelImage& ref, const PixelImage& test) {
  return {psnr(ref, test), ssim(ref, test), ms_ssim(ref, test)};
}

}  // namespace acdc
