#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "acdc/iqa.hpp"
#include "acdc/types.hpp"

namespace acdc {

enum class Method { Uso, FrmExhaustive, FrmBracket };

const char* method_name(Method method);
std::optional<Method> parse_method(const std::string& name);

struct BenchOptions {
  std::string corpus_dir;
  std::vector<Method> methods = {Method::Uso, Method::FrmExhaustive};
  double delta = 1.0;
  int block_size = 8;
  PixelRange range;
  int jobs = 0;  // 0 = hardware concurrency
};

/// One (image, method) outcome. For the FRM methods dc0 holds the chosen
/// initial DC per corner (TL, TR, BL, BR) and flow the achieved flow rate;
/// for USO dc0 holds the corner block's post-adjustment DC and flow is 0.
struct BenchRecord {
  std::string image;
  Method method = Method::Uso;
  QualityReport quality;
  std::array<double, 4> dc0{};
  std::array<double, 4> flow{};
  double seconds = 0.0;
};

struct BenchReport {
  std::vector<Method> methods;
  std::vector<BenchRecord> records;  // image-major, methods in option order
  std::vector<std::string> warnings;
  int images_processed = 0;
  int images_skipped = 0;
};

/// Runs every method over the corpus (*.pgm, lexicographic), scoring each
/// recovery against the original. Images are processed concurrently;
/// records and warnings come out in deterministic order regardless.
/// Unreadable or mis-shaped images are skipped with a warning on `err`.
BenchReport run_bench(const BenchOptions& options, std::ostream& err);

/// CSV of all records: fixed 6-decimal numeric fields, "inf" for infinite
/// PSNR, one trailing newline.
void write_bench_csv(const std::string& path, const BenchReport& report);

/// Per-metric FRM - USO difference charts (one SVG per FRM method and
/// metric) in `dir`, created if needed. No-op unless USO and at least one
/// FRM method were both run.
void write_bench_plots(const std::string& dir, const BenchReport& report);

/// Human-readable summary: per FRM method and metric, the mean and median
/// delta against USO and the fraction of images with FRM >= USO. A PSNR
/// delta between two infinities counts as 0; a one-sided infinity is kept
/// out of the mean/median but still counted in the fraction.
std::string bench_summary(const BenchReport& report);

}  // namespace acdc
