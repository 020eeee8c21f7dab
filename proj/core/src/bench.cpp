#include "acdc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "acdc/blockdct.hpp"
#include "acdc/frm.hpp"
#include "acdc/pgm.hpp"
#include "acdc/svg.hpp"
#include "acdc/uso.hpp"

namespace acdc {
namespace {

namespace fs = std::filesystem;

std::string fixed6(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct ImageOutcome {
  std::vector<BenchRecord> records;
  std::vector<std::string> warnings;
  bool processed = false;
};

BenchRecord run_method(const std::string& name, Method method, const PixelImage& original,
                       const DcFreePlane& plane, const BenchOptions& opt) {
  BenchRecord rec;
  rec.image = name;
  rec.method = method;

  const auto start = std::chrono::steady_clock::now();
  PixelImage recovered;
  if (method == Method::Uso) {
    UsoResult result = recover_uso_traced(plane);
    recovered = std::move(result.image);
    for (std::size_t k = 0; k < result.corners.size(); ++k) {
      rec.dc0[k] = static_cast<double>(plane.grid.n) * result.corners[k].shift;
      rec.flow[k] = 0.0;
    }
  } else {
    SearchConfig cfg;
    cfg.delta = opt.delta;
    cfg.mode = method == Method::FrmExhaustive ? SearchMode::Exhaustive : SearchMode::Bracket;
    FrmResult result = recover_frm_traced(plane, cfg);
    recovered = std::move(result.image);
    for (std::size_t k = 0; k < result.corners.size() && k < 4; ++k) {
      rec.dc0[k] = result.corners[k].trace.chosen;
      rec.flow[k] = result.corners[k].flow.rate;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  rec.seconds = std::chrono::duration<double>(stop - start).count();
  rec.quality = score(original, recovered);
  return rec;
}

ImageOutcome process_image(const fs::path& path, const BenchOptions& opt) {
  ImageOutcome out;
  const std::string name = path.filename().string();
  try {
    PixelImage original = load_pgm(path.string());
    original.range = opt.range;
    const DcFreePlane plane = strip_dc(original, opt.block_size);
    for (Method method : opt.methods) {
      out.records.push_back(run_method(name, method, original, plane, opt));
    }
    out.processed = true;
  } catch (const std::exception& e) {
    out.records.clear();
    out.warnings.push_back("warning: skipping " + name + ": " + e.what());
  }
  return out;
}

// Deltas of one FRM method against USO, by image order. PSNR inf - inf
// counts as 0. Returns per-image deltas aligned with processed images.
std::vector<double> method_deltas(const BenchReport& report, Method method,
                                  double QualityReport::* metric) {
  std::vector<double> uso, frm;
  for (const BenchRecord& rec : report.records) {
    if (rec.method == Method::Uso) uso.push_back(rec.quality.*metric);
    if (rec.method == method) frm.push_back(rec.quality.*metric);
  }
  std::vector<double> deltas;
  const std::size_t count = std::min(uso.size(), frm.size());
  deltas.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double a = frm[i], b = uso[i];
    if (std::isinf(a) && std::isinf(b) && a == b) {
      deltas.push_back(0.0);
    } else {
      deltas.push_back(a - b);
    }
  }
  return deltas;
}

bool has_method(const BenchReport& report, Method method) {
  return std::find(report.methods.begin(), report.methods.end(), method) != report.methods.end();
}

constexpr std::array<std::pair<const char*, double QualityReport::*>, 3> kMetrics = {{
    {"psnr", &QualityReport::psnr},
    {"ssim", &QualityReport::ssim},
    {"ms_ssim", &QualityReport::ms_ssim},
}};

}  // namespace

const char* method_name(Method method) {
  switch (method) {
    case Method::Uso: return "uso";
    case Method::FrmExhaustive: return "frm-exhaustive";
    case Method::FrmBracket: return "frm-bracket";
  }
  return "?";
}

std::optional<Method> parse_method(const std::string& name) {
  if (name == "uso") return Method::Uso;
  if (name == "frm-exhaustive") return Method::FrmExhaustive;
  if (name == "frm-bracket") return Method::FrmBracket;
  return std::nullopt;
}

BenchReport run_bench(const BenchOptions& options, std::ostream& err) {
  std::vector<fs::path> files;
  if (!fs::is_directory(options.corpus_dir)) {
    throw ParseError("bench: corpus directory not found: " + options.corpus_dir);
  }
  for (const auto& entry : fs::directory_iterator(options.corpus_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<ImageOutcome> outcomes(files.size());
  unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs)
                                   : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= files.size()) return;
      outcomes[i] = process_image(files[i], options);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  BenchReport report;
  report.methods = options.methods;
  for (ImageOutcome& outcome : outcomes) {
    for (const std::string& w : outcome.warnings) {
      err << w << '\n';
      report.warnings.push_back(w);
    }
    if (outcome.processed) {
      ++report.images_processed;
      for (BenchRecord& rec : outcome.records) report.records.push_back(std::move(rec));
    } else {
      ++report.images_skipped;
    }
  }
  return report;
}

void write_bench_csv(const std::string& path, const BenchReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << "image,method,psnr,ssim,ms_ssim,"
      << "dc0_tl,dc0_tr,dc0_bl,dc0_br,flow_tl,flow_tr,flow_bl,flow_br,seconds\n";
  for (const BenchRecord& rec : report.records) {
    out << rec.image << ',' << method_name(rec.method) << ',' << fixed6(rec.quality.psnr) << ','
        << fixed6(rec.quality.ssim) << ',' << fixed6(rec.quality.ms_ssim);
    for (double v : rec.dc0) out << ',' << fixed6(v);
    for (double v : rec.flow) out << ',' << fixed6(v);
    out << ',' << fixed6(rec.seconds) << '\n';
  }
  if (!out) throw ParseError("cannot write " + path);
}

void write_bench_plots(const std::string& dir, const BenchReport& report) {
  if (!has_method(report, Method::Uso)) return;
  fs::create_directories(dir);
  for (Method method : {Method::FrmExhaustive, Method::FrmBracket}) {
    if (!has_method(report, method)) continue;
    for (const auto& [metric_name, metric] : kMetrics) {
      const std::vector<double> deltas = method_deltas(report, method, metric);
      const std::string file = std::string("delta_") + metric_name + "_" + method_name(method) +
                               ".svg";
      const std::string title = std::string(metric_name) + " delta (" + method_name(method) +
                                " - uso)";
      write_delta_svg((fs::path(dir) / file).string(), title, deltas);
    }
  }
}

std::string bench_summary(const BenchReport& report) {
  std::ostringstream out;
  out << "processed " << report.images_processed << " images, skipped " << report.images_skipped
      << "\n";
  if (!has_method(report, Method::Uso)) return std::move(out).str();

  for (Method method : {Method::FrmExhaustive, Method::FrmBracket}) {
    if (!has_method(report, method)) continue;
    out << method_name(method) << " vs uso:\n";
    for (const auto& [metric_name, metric] : kMetrics) {
      const std::vector<double> deltas = method_deltas(report, method, metric);
      std::vector<double> finite;
      int ge = 0;
      for (double d : deltas) {
        if (std::isfinite(d)) finite.push_back(d);
        if (d >= 0.0) ++ge;
      }
      out << "  " << metric_name << ": ";
      if (finite.empty()) {
        out << "mean delta n/a, median delta n/a";
      } else {
        double mean = 0.0;
        for (double d : finite) mean += d;
        mean /= static_cast<double>(finite.size());
        std::sort(finite.begin(), finite.end());
        const std::size_t m = finite.size();
        const double median =
            m % 2 == 1 ? finite[m / 2] : 0.5 * (finite[m / 2 - 1] + finite[m / 2]);
        out << "mean delta " << fixed6(mean) << ", median delta " << fixed6(median);
      }
      if (!deltas.empty()) {
        out << ", frm>=uso " << ge << "/" << deltas.size();
      }
      out << "\n";
    }
  }
  return std::move(out).str();
}

}  // namespace acdc
